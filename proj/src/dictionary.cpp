#include "wavedict/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavedict/wavelet_gen.hpp"

namespace wavedict {

namespace {

// Smallest r >= 0 with 2^r >= x (x >= 1).
int ceil_log2(long long x) {
  int r = 0;
  while ((1LL << r) < x) ++r;
  return r;
}

long long ceil_div(long long num, long long den) {
  return (num + den - 1) / den;  // num >= 0, den > 0
}

// Returns r_b with b = 2^-r_b, or -1 when b is not a dyadic reciprocal.
int dyadic_exponent(double b) {
  if (!(b > 0.0)) return -1;
  const double r = std::log(1.0 / b) / std::log(2.0);
  if (std::abs(r - std::round(r)) > 1e-10) return -1;
  const int rb = static_cast<int>(std::lround(r));
  return rb < 0 ? -1 : rb;
}

// Copies `values` into column `col` starting at (possibly negative) row
// `dest`; rows outside [0, n_points) are dropped, which is exactly the
// row-range restriction of the placement equations.
void place_column(const Eigen::VectorXd& values, long long dest,
                  Eigen::MatrixXd& matrix, Eigen::Index col) {
  const long long rows = matrix.rows();
  const long long lo = std::max<long long>(0, -dest);
  const long long hi = std::min<long long>(values.size(), rows - dest);
  for (long long m = lo; m < hi; ++m) matrix(dest + m, col) = values(m);
}

}  // namespace

const char* to_string(AtomKind kind) {
  switch (kind) {
    case AtomKind::scaling: return "scaling";
    case AtomKind::wavelet: return "wavelet";
    case AtomKind::cosine: return "cosine";
  }
  return "?";
}

const char* to_string(AtomLocality locality) {
  return locality == AtomLocality::inner ? "inner" : "boundary";
}

WaveletDictionary wavelet_dict(Family family, int n_points,
                               std::vector<int> levels, double b) {
  if (n_points < 2) {
    throw std::invalid_argument("N_b must be at least 2");
  }
  if (!std::is_sorted(levels.begin(), levels.end())) {
    throw std::invalid_argument("level vector must be ascending");
  }
  const int r_b = dyadic_exponent(b);
  if (r_b < 0) {
    throw std::invalid_argument(
        "Choose b such that 1/b = 2^r for some integer r");
  }

  const FilterPair fp = filters(family);
  const long long K = fp.h.size() - 1;
  const long long M = fp.g.size() - 1;
  if ((K + M) % 2 != 0) {
    throw std::invalid_argument("filter supports K+M must be even");
  }
  const long long s = (K + M) / 2;
  const int r = ceil_log2(n_points - 1);

  // Drop levels too coarse to admit any inner function:
  // j_min = ceil(log2(s 2^r / (N_b-1))).
  int j_min = 0;
  while (static_cast<long long>(n_points - 1) * (1LL << j_min) <
         (s << r)) {
    ++j_min;
  }
  std::erase_if(levels, [&](int j) { return j < j_min; });

  if (levels.empty()) {
    throw std::invalid_argument(
        "no inner functions for these values of levels j, increase j");
  }
  if (r < levels.back() + r_b) {
    throw std::invalid_argument(
        "small number of points N_b for these values of j and b");
  }

  const long long a = 1LL << r_b;  // a = 1/b
  const SampledGenerators gen = wavelet_gen(fp.h, fp.g, r - levels.front());

  const auto level_atoms = [&](long long support, int j) {
    // support*a - 1 + ceil((N_b-1) 2^(j-r) / b)
    return support * a - 1 +
           ceil_div(n_points - 1, 1LL << (r - j - r_b));
  };

  std::vector<int> counts;
  counts.push_back(static_cast<int>(level_atoms(K, levels.front())));
  for (int j : levels) counts.push_back(static_cast<int>(level_atoms(s, j)));

  long long total = 0;
  for (int c : counts) total += c;

  WaveletDictionary dict;
  dict.matrix = Eigen::MatrixXd::Zero(n_points, total);
  dict.counts = counts;
  dict.columns.resize(total);

  const auto fill_block = [&](const Eigen::VectorXd& values, int j,
                              long long shift_origin, int count,
                              long long first_col, AtomKind kind) {
    const int ds = r - j - r_b;  // log2 of the row step per unit shift
    for (long long i = 1; i <= count; ++i) {
      const long long shift = i - shift_origin;  // k of phi(2^j x - b k)
      const long long dest = shift * (1LL << ds);
      const Eigen::Index col = first_col + i - 1;
      place_column(values, dest, dict.matrix, col);
      const bool inner = dest >= 0 && dest + values.size() <= n_points;
      dict.columns[col] = {j, static_cast<int>(shift),
                           inner ? AtomLocality::inner : AtomLocality::boundary,
                           kind};
    }
  };

  // Scaling atoms live on the coarsest level only.
  fill_block(gen.phi, levels.front(), K * a, counts[0], 0, AtomKind::scaling);

  // Wavelet atoms per level, psi resampled to the level's grid step.
  Eigen::VectorXd psi = gen.psi;
  int psi_level = levels.front();
  long long first_col = counts[0];
  for (std::size_t l = 0; l < levels.size(); ++l) {
    while (psi_level < levels[l]) {
      psi = psi(Eigen::seq(0, psi.size() - 1, 2)).eval();
      ++psi_level;
    }
    // Reconciliation of the two counting routes for wavelets on level j:
    // the floor/ceil boundary bookkeeping must agree with the closed-form
    // count. Checked in all build modes.
    {
      const long long den = 1LL << (r - levels[l] - r_b);
      const long long scaled = (n_points - 1) - (s << (r - levels[l]));
      const long long k1 =
          scaled >= 0 ? scaled / den : -ceil_div(-scaled, den);
      const long long k2 = ceil_div(n_points - 1, den) - 1;
      if (s * a + k2 != counts[1 + l] || k1 > k2) {
        throw std::logic_error("wavelet-level atom counts are inconsistent");
      }
    }
    fill_block(psi, levels[l], s * a, counts[1 + l], first_col,
               AtomKind::wavelet);
    first_col += counts[1 + l];
  }

  return dict;
}

Eigen::MatrixXd dcos(int n_points, int n_cosine) {
  if (n_points < 1) throw std::invalid_argument("N_b must be positive");
  if (n_cosine < 0 || n_cosine > n_points) {
    throw std::invalid_argument("cosine count must satisfy 0 <= M_c <= N_b");
  }
  Eigen::MatrixXd block(n_points, n_cosine);
  for (int n = 1; n <= n_cosine; ++n) {
    for (int k = 1; k <= n_points; ++k) {
      block(k - 1, n - 1) = std::cos(std::numbers::pi * (2 * k - 1) * (n - 1) /
                                     (2.0 * n_points));
    }
  }
  return norm_dict(block, 1.0);
}

Eigen::MatrixXd norm_dict(const Eigen::MatrixXd& dict, double delta,
                          std::vector<Eigen::Index>* kept_columns) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  constexpr double kTol = 1e-5;
  const double root = std::sqrt(delta);

  std::vector<Eigen::Index> kept;
  kept.reserve(dict.cols());
  for (Eigen::Index i = 0; i < dict.cols(); ++i) {
    if (root * dict.col(i).norm() > kTol) kept.push_back(i);
  }

  Eigen::MatrixXd out(dict.rows(), static_cast<Eigen::Index>(kept.size()));
  for (Eigen::Index i = 0; i < out.cols(); ++i) {
    const auto col = dict.col(kept[i]);
    out.col(i) = col / (root * col.norm());
  }
  if (kept_columns) *kept_columns = std::move(kept);
  return out;
}

WaveletDictionary gen_dict(std::string_view name, DictionaryParams pars) {
  // Parameter validation mirrors the generator front end: b first, then
  // the family name; level order is normalized here.
  if (!(pars.b > 0.0)) throw std::invalid_argument("I expect b>0");
  if (dyadic_exponent(pars.b) < 0) {
    throw std::invalid_argument(
        "Choose b such that 1/b = 2^r for some integer r");
  }
  const std::optional<Family> family = parse_family(name);
  if (!family) {
    throw std::invalid_argument("Unknown name of a wavelet family");
  }
  return gen_dict(*family, std::move(pars));
}

WaveletDictionary gen_dict(Family family, DictionaryParams pars) {
  std::sort(pars.levels.begin(), pars.levels.end());
  WaveletDictionary dict =
      wavelet_dict(family, pars.n_points, pars.levels, pars.b);

  std::vector<Eigen::Index> kept;
  const Eigen::Index before = dict.matrix.cols();
  dict.matrix = norm_dict(dict.matrix, 1.0, &kept);

  if (static_cast<Eigen::Index>(kept.size()) != before) {
    // Keep descriptors and per-level counts in lockstep with the
    // surviving columns.
    std::vector<char> alive(before, 0);
    for (Eigen::Index i : kept) alive[i] = 1;

    std::vector<AtomDescriptor> columns;
    columns.reserve(kept.size());
    std::vector<int> counts(dict.counts.size(), 0);
    Eigen::Index col = 0;
    for (std::size_t bucket = 0; bucket < dict.counts.size(); ++bucket) {
      for (int i = 0; i < dict.counts[bucket]; ++i, ++col) {
        if (alive[col]) {
          columns.push_back(dict.columns[col]);
          ++counts[bucket];
        }
      }
    }
    dict.removed_columns = static_cast<int>(before - kept.size());
    dict.columns = std::move(columns);
    dict.counts = std::move(counts);
  }
  return dict;
}

FullDictionary full_dictionary(Family family, const DictionaryParams& pars,
                               int n_cosine) {
  WaveletDictionary wavelet = gen_dict(family, pars);
  const Eigen::MatrixXd cosine = dcos(pars.n_points, n_cosine);

  FullDictionary full;
  full.n_cosine = static_cast<int>(cosine.cols());
  full.removed_columns = wavelet.removed_columns;
  full.counts = std::move(wavelet.counts);
  full.matrix.resize(pars.n_points, cosine.cols() + wavelet.matrix.cols());
  full.matrix << cosine, wavelet.matrix;

  full.columns.reserve(full.matrix.cols());
  for (int n = 0; n < full.n_cosine; ++n) {
    full.columns.push_back({0, n, AtomLocality::inner, AtomKind::cosine});
  }
  full.columns.insert(full.columns.end(), wavelet.columns.begin(),
                      wavelet.columns.end());
  return full;
}

FullDictionary full_dictionary(std::string_view name,
                               const DictionaryParams& pars, int n_cosine) {
  // Route through the string front end so name/parameter validation and
  // error messages are identical to gen_dict's.
  if (!(pars.b > 0.0)) throw std::invalid_argument("I expect b>0");
  if (dyadic_exponent(pars.b) < 0) {
    throw std::invalid_argument(
        "Choose b such that 1/b = 2^r for some integer r");
  }
  const std::optional<Family> family = parse_family(name);
  if (!family) {
    throw std::invalid_argument("Unknown name of a wavelet family");
  }
  return full_dictionary(*family, pars, n_cosine);
}

}  // namespace wavedict
