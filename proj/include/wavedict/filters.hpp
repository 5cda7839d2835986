#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string_view>

namespace wavedict {

/// Wavelet families with a built-in filter pair. Names are matched
/// case-sensitively by parse_family / filters.
enum class Family {
  CW2,
  CW3,
  CW4,
  CDF97,
  CDF97d,
  CDF53,
  Short4,
  Short3,
  Short2,
  Db3,
  Db4,
  Db5,
  Sym3,
  Sym4,
  Sym5,
  Coif26,
  Coif38,
};

struct FamilyInfo {
  Family id;
  const char* name;
  int vanishing_moments;
};

/// Catalog of the 17 supported families, in fixed listing order.
std::span<const FamilyInfo> family_catalog();

std::optional<Family> parse_family(std::string_view name);
const char* family_name(Family family);

/// Scaling filter h (length K+1) and wavelet filter g (length M+1):
///   phi(x) = sum_k h(k) phi(2x+1-k),  psi(x) = sum_k g(k) phi(2x+1-k).
struct FilterPair {
  Eigen::VectorXd h;
  Eigen::VectorXd g;
};

FilterPair filters(Family family);

/// String-keyed lookup; nullopt for an unknown family name (the caller
/// decides whether that is an error).
std::optional<FilterPair> filters(std::string_view name);

/// Rescales h so its entries sum to 2, the scale required by the
/// refinement equation. Throws std::invalid_argument if sum(h) == 0.
Eigen::VectorXd normalize_scaling_filter(const Eigen::VectorXd& h);

}  // namespace wavedict
