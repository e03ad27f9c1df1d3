#pragma once

#include <cmath>
#include <optional>

#include "croute/base.hpp"

namespace croute {

// All derived parameters of the routing pipeline. The Θ/Ω constants the
// paper leaves open are exposed as configuration (c_gamma, c_beta, and the
// sparsest-cut approximation factor, which certifies nothing here and only
// enters α_WL). Logarithms that must stay rational are taken as ⌈log₂·⌉.
struct ParamConfig {
  double c_gamma = 1.0;
  double c_beta = 1.0;
  std::optional<Rat> alpha_arv_override;
};

struct ParamTable {
  long long k = 0;
  long long gamma = 0;   // γ_KRV(k) = ⌈c_γ·(log₂k)²⌉, also the KRV round count
  Rat alpha_arv;         // default ⌈√(log₂k)⌉
  Rat alpha;             // 1 / (2^11 · γ · ⌈log₂k⌉)
  Rat alpha_wl;          // α / α_ARV
  long long beta = 0;    // ⌈c_β·log₂(k+2)⌉
  long long k1 = 0;      // ⌊k / (192·γ³·log₂γ)⌋
  long long p = 0;       // ⌈8β/α_WL⌉
  long long k_star = 0;  // ⌊k₁/(6p)⌋
  long long k_prime = 0; // 2·⌊k*/(4γ³)⌋ (kept even)
  bool degenerate = true;

  // congestion budget of a good-set flow certificate, ⌈2β/α_WL⌉
  long long cert_budget() const { return rat_ceil(Rat(2 * beta) / alpha_wl); }

  static ParamTable from_k(long long k, const ParamConfig& cfg = {}) {
    ParamTable t;
    t.k = k;
    if (k < 2) return t;
    const double log2k = std::log2(static_cast<double>(k));
    t.gamma = static_cast<long long>(std::ceil(cfg.c_gamma * log2k * log2k));
    t.beta = static_cast<long long>(
        std::ceil(cfg.c_beta * std::log2(static_cast<double>(k + 2))));
    if (t.gamma < 2 || t.beta < 1) return t;
    t.alpha_arv = cfg.alpha_arv_override
                      ? *cfg.alpha_arv_override
                      : Rat(static_cast<long long>(std::ceil(std::sqrt(log2k))));
    if (t.alpha_arv <= 0) return t;
    const long long log2k_up =
        static_cast<long long>(std::ceil(std::log2(static_cast<double>(k))));
    t.alpha = Rat(1) / (Rat(2048) * Rat(t.gamma) * Rat(log2k_up));
    t.alpha_wl = t.alpha / t.alpha_arv;
    t.k1 = static_cast<long long>(std::floor(
        static_cast<double>(k) /
        (192.0 * std::pow(static_cast<double>(t.gamma), 3.0) *
         std::log2(static_cast<double>(t.gamma)))));
    if (t.k1 < 1) return t;
    t.p = rat_ceil(Rat(8 * t.beta) / t.alpha_wl);
    if (t.p < 1) return t;
    t.k_star = t.k1 / (6 * t.p);
    if (t.k_star < 1) return t;
    long long g3 = t.gamma * t.gamma * t.gamma;
    t.k_prime = 2 * (t.k_star / (4 * g3));
    if (t.k_prime < 2) return t;
    t.degenerate = false;
    return t;
  }
};

}  // namespace croute
