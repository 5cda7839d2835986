#include "wavedict/filters.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wavedict {

namespace {

Eigen::VectorXd make_vector(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

Eigen::VectorXd scaled(std::initializer_list<double> values, double denom) {
  return make_vector(values) / denom;
}

// -flip(v), the construction several families use for g.
Eigen::VectorXd negated_reverse(const Eigen::VectorXd& v) {
  return -v.reverse();
}

constexpr FamilyInfo kCatalog[] = {
    {Family::CW2, "CW2", 2},       {Family::CW3, "CW3", 3},
    {Family::CW4, "CW4", 4},       {Family::CDF97, "CDF97", 4},
    {Family::CDF97d, "CDF97d", 4}, {Family::CDF53, "CDF53", 2},
    {Family::Short4, "Short4", 4}, {Family::Short3, "Short3", 3},
    {Family::Short2, "Short2", 2}, {Family::Db3, "Db3", 3},
    {Family::Db4, "Db4", 4},       {Family::Db5, "Db5", 5},
    {Family::Sym3, "Sym3", 3},     {Family::Sym4, "Sym4", 4},
    {Family::Sym5, "Sym5", 5},     {Family::Coif26, "Coif26", 2},
    {Family::Coif38, "Coif38", 3},
};

}  // namespace

std::span<const FamilyInfo> family_catalog() { return kCatalog; }

std::optional<Family> parse_family(std::string_view name) {
  for (const FamilyInfo& info : kCatalog) {
    if (name == info.name) return info.id;
  }
  return std::nullopt;
}

const char* family_name(Family family) {
  for (const FamilyInfo& info : kCatalog) {
    if (info.id == family) return info.name;
  }
  throw std::invalid_argument("unknown Family value");
}

FilterPair filters(Family family) {
  const double s15 = std::sqrt(15.0);
  const double s7 = std::sqrt(7.0);
  switch (family) {
    case Family::CW2:
      return {make_vector({1.0 / 2, 1.0, 1.0 / 2}),
              scaled({1, -6, 10, -6, 1}, 12.0)};
    case Family::CW3:
      return {make_vector({1.0 / 4, 3.0 / 4, 3.0 / 4, 1.0 / 4}),
              scaled({1, -29, 147, -303, 303, -147, 29, -1}, 480.0)};
    case Family::CW4:
      return {make_vector({1.0 / 8, 1.0 / 2, 3.0 / 4, 1.0 / 2, 1.0 / 8}),
              scaled({1, -124, 1677, -7904, 18482, -24264, 18482, -7904, 1677,
                      -124, 1},
                     2520.0)};
    case Family::CDF97:
      return {make_vector({-0.045635881557, -0.028771763114, 0.295635881557,
                           0.557543526229, 0.295635881557, -0.028771763114,
                           -0.045635881557}),
              make_vector({0.026748757411, 0.016864118443, -0.078223266529,
                           -0.266864118443, 0.602949018236, -0.266864118443,
                           -0.078223266529, 0.016864118443, 0.026748757411})};
    case Family::CDF97d:
      return {make_vector({0.026748757411, -0.016864118443, -0.078223266529,
                           0.266864118443, 0.602949018236, 0.266864118443,
                           -0.078223266529, -0.016864118443, 0.026748757411}),
              make_vector({0.045635881557, -0.028771763114, -0.295635881557,
                           0.557543526229, -0.295635881557, -0.028771763114,
                           0.045635881557})};
    case Family::CDF53:
      return {make_vector({1.0 / 2, 1.0, 1.0 / 2}),
              make_vector({-1.0 / 8, -1.0 / 4, 3.0 / 4, -1.0 / 4, -1.0 / 8})};
    case Family::Short4:
      return {make_vector({1.0 / 8, 1.0 / 2, 3.0 / 4, 1.0 / 2, 1.0 / 8}),
              make_vector({1.0 / 8, -1.0 / 2, 3.0 / 4, -1.0 / 2, 1.0 / 8})};
    case Family::Short3:
      return {make_vector({1.0 / 4, 3.0 / 4, 3.0 / 4, 1.0 / 4}),
              make_vector({-1.0 / 4, 3.0 / 4, -3.0 / 4, 1.0 / 4})};
    case Family::Short2:
      return {make_vector({1.0 / 2, 1.0, 1.0 / 2}),
              make_vector({-1.0 / 2, 1.0, -1.0 / 2})};
    case Family::Db3:
    case Family::Sym3:
      // Db3 and Sym3 coincide; both entries are kept in the catalog to
      // mirror the published family list.
      return {make_vector({0.035226291882101, -0.085441273882241,
                           -0.135011020010391, 0.459877502119331,
                           0.806891509313339, 0.332670552950957}),
              make_vector({-0.332670552950957, 0.806891509313339,
                           -0.459877502119331, -0.135011020010391,
                           0.085441273882241, 0.035226291882101})};
    case Family::Db4:
      return {make_vector({0.162901714025620, 0.505472857545650,
                           0.446100069123190, -0.019787513117910,
                           -0.132253583684370, 0.021808150237390,
                           0.023251800535560, -0.007493494665130}),
              negated_reverse(make_vector(
                  {0.162901714025620, -0.505472857545650, 0.446100069123190,
                   0.019787513117910, -0.132253583684370, -0.021808150237390,
                   0.023251800535560, 0.007493494665130}))};
    case Family::Db5:
      return {make_vector({0.003335725285002, -0.012580751999016,
                           -0.006241490213012, 0.077571493840065,
                           -0.032244869585030, -0.242294887066190,
                           0.138428145901103, 0.724308528438574,
                           0.603829269797473, 0.160102397974125}),
              make_vector({-0.160102397974125, 0.603829269797473,
                           -0.724308528438574, 0.138428145901103,
                           0.242294887066190, -0.032244869585030,
                           -0.077571493840065, -0.006241490213012,
                           0.012580751999016, 0.003335725285002})};
    case Family::Sym4:
      return {make_vector({0.022785172948000, -0.008912350720850,
                           -0.070158812089500, 0.210617267102000,
                           0.568329121705000, 0.351869534328000,
                           -0.020955482562550, -0.053574450709000}),
              make_vector({0.022785172948000, 0.008912350720850,
                           -0.070158812089500, -0.210617267102000,
                           0.568329121705000, -0.351869534328000,
                           -0.020955482562550, 0.053574450709000})
                  .reverse()};
    case Family::Sym5:
      return {make_vector({0.027333068345078, 0.029519490925775,
                           -0.039134249302383, 0.199397533977394,
                           0.723407690402421, 0.633978963458212,
                           0.016602105764522, -0.175328089908450,
                           -0.021101834024759, 0.019538882735287}),
              make_vector({-0.019538882735287, -0.021101834024759,
                           0.175328089908450, 0.016602105764522,
                           -0.633978963458212, 0.723407690402421,
                           -0.199397533977394, -0.039134249302383,
                           -0.029519490925775, 0.027333068345078})};
    case Family::Coif26:
      return {scaled({9 - s15, 13 + s15, 6 + 2 * s15, 6 - 2 * s15, 1 - s15,
                      -3 + s15},
                     32.0),
              negated_reverse(scaled({9 - s15, -13 - s15, 6 + 2 * s15,
                                      -6 + 2 * s15, 1 - s15, 3 - s15},
                                     32.0))};
    case Family::Coif38:
      return {make_vector({-1.0 / 32 - s7 / 128, -3.0 / 128,
                           9.0 / 32 + 3 * s7 / 128, 73.0 / 128,
                           9.0 / 32 - 3 * s7 / 128, -9.0 / 128,
                           -1.0 / 32 + s7 / 128, 3.0 / 128}),
              negated_reverse(make_vector(
                  {-1.0 / 32 - s7 / 128, 3.0 / 128, 9.0 / 32 + 3 * s7 / 128,
                   -73.0 / 128, 9.0 / 32 - 3 * s7 / 128, 9.0 / 128,
                   -1.0 / 32 + s7 / 128, -3.0 / 128}))};
  }
  throw std::invalid_argument("unknown Family value");
}

std::optional<FilterPair> filters(std::string_view name) {
  std::optional<Family> family = parse_family(name);
  if (!family) return std::nullopt;
  return filters(*family);
}

Eigen::VectorXd normalize_scaling_filter(const Eigen::VectorXd& h) {
  const double sum = h.sum();
  if (sum == 0.0) {
    throw std::invalid_argument(
        "degenerate scaling filter: entries sum to zero");
  }
  return 2.0 * h / sum;
}

}  // namespace wavedict
