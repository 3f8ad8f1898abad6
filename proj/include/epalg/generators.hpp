#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace epalg {

/// The 15 basis generators of the extended Poincare algebra, in the canonical
/// order that fixes adjoint row/column meaning and all JSON output.
enum class Gen : int {
  J1 = 0, J2, J3,
  K1, K2, K3,
  Gam0, Gam1, Gam2, Gam3,
  P0, P1, P2, P3,
  G,
};

inline constexpr int kNumGen = 15;
inline constexpr int kNumLorentzGen = 10;  // J, K, Gamma sector

inline constexpr std::array<const char*, kNumGen> kGenNames = {
    "J1", "J2", "J3", "K1", "K2", "K3", "Gam0", "Gam1", "Gam2", "Gam3",
    "P0", "P1", "P2", "P3", "G"};

inline int index_of(Gen g) { return static_cast<int>(g); }
inline Gen gen_at(int i) { return static_cast<Gen>(i); }
inline const char* name_of(Gen g) { return kGenNames[static_cast<std::size_t>(index_of(g))]; }
std::optional<Gen> gen_from_name(const std::string& name);

inline bool is_rotation(Gen g) { return index_of(g) <= 2; }
inline bool is_boost(Gen g) { return index_of(g) >= 3 && index_of(g) <= 5; }
inline bool is_gamma(Gen g) { return index_of(g) >= 6 && index_of(g) <= 9; }
inline bool is_momentum(Gen g) { return index_of(g) >= 10 && index_of(g) <= 13; }
inline bool is_g(Gen g) { return g == Gen::G; }
inline bool in_lorentz_sector(Gen g) { return index_of(g) < kNumLorentzGen; }

inline Gen rotation(int k) { return gen_at(k - 1); }       // k = 1..3
inline Gen boost(int k) { return gen_at(3 + k - 1); }      // k = 1..3
inline Gen gamma_mu(int mu) { return gen_at(6 + mu); }     // mu = 0..3
inline Gen momentum_mu(int mu) { return gen_at(10 + mu); } // mu = 0..3

/// Minkowski metric, signature (-,+,+,+).
inline constexpr std::array<int, 4> kEta = {-1, 1, 1, 1};

/// Levi-Civita symbol for indices in {1,2,3}.
inline int epsilon(int i, int j, int k) { return (i - j) * (j - k) * (k - i) / 2; }

}  // namespace epalg
