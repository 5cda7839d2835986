#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "wavedict/dictionary.hpp"
#include "wavedict/wavelet_gen.hpp"

using wavedict::AtomDescriptor;
using wavedict::AtomKind;
using wavedict::AtomLocality;
using wavedict::DictionaryParams;
using wavedict::Family;
using wavedict::WaveletDictionary;

namespace {

// Smallest r with 2^r >= x.
int ceil_log2(long x) {
  int r = 0;
  while ((1L << r) < x) ++r;
  return r;
}

}  // namespace

TEST_CASE("golden example: Short3, N_b=33, j=2:3, b=1/4") {
  const WaveletDictionary dict =
      wavedict::gen_dict("Short3", {33, {2, 3}, 0.25});

  CHECK(dict.matrix.rows() == 33);
  CHECK(dict.matrix.cols() == 97);
  REQUIRE(dict.counts.size() == 3);
  CHECK(dict.counts[0] == 27);
  CHECK(dict.counts[1] == 27);
  CHECK(dict.counts[2] == 43);
  CHECK(dict.removed_columns == 0);

  const AtomDescriptor& col30 = dict.columns[29];
  CHECK(col30.level == 2);
  CHECK(col30.shift == -9);
  CHECK(col30.locality == AtomLocality::boundary);
  CHECK(col30.kind == AtomKind::wavelet);

  for (Eigen::Index i = 0; i < dict.matrix.cols(); ++i) {
    CHECK(std::abs(dict.matrix.col(i).norm() - 1.0) <= 1e-10);
  }
}

TEST_CASE("scaling-atom count for Short2 at the basis grid") {
  const WaveletDictionary dict =
      wavedict::wavelet_dict(Family::Short2, 33, {2}, 1.0);
  CHECK(dict.counts[0] == 5);
}

TEST_CASE("atom counts match the descriptor buckets on a parameter grid") {
  const Family families[] = {Family::Short3, Family::CW2, Family::CDF97,
                             Family::Db3, Family::Coif38, Family::CDF97d};
  for (Family family : families) {
    for (int n_points : {33, 65, 129}) {
      for (double b : {1.0, 0.5, 0.25}) {
        const auto pair = wavedict::filters(family);
        const long s = (pair.h.size() - 1 + pair.g.size() - 1) / 2;
        const int r = ceil_log2(n_points - 1);
        const int r_b = static_cast<int>(std::lround(std::log2(1.0 / b)));
        int j_min = 0;
        while (static_cast<long>(n_points - 1) * (1L << j_min) < (s << r)) {
          ++j_min;
        }
        if (j_min + 1 > r - r_b) continue;  // configuration not admissible
        const std::vector<int> levels = {j_min, j_min + 1};

        CAPTURE(wavedict::family_name(family));
        CAPTURE(n_points);
        CAPTURE(b);
        const WaveletDictionary dict =
            wavedict::gen_dict(family, {n_points, levels, b});

        REQUIRE(dict.counts.size() == 3);
        long total = 0;
        for (int c : dict.counts) total += c;
        CHECK(dict.matrix.cols() == total);
        CHECK(dict.columns.size() == static_cast<std::size_t>(total));

        int scaling = 0, w0 = 0, w1 = 0;
        for (const AtomDescriptor& d : dict.columns) {
          if (d.kind == AtomKind::scaling) {
            CHECK(d.level == levels[0]);
            ++scaling;
          } else if (d.level == levels[0]) {
            ++w0;
          } else {
            CHECK(d.level == levels[1]);
            ++w1;
          }
        }
        CHECK(scaling == dict.counts[0]);
        CHECK(w0 == dict.counts[1]);
        CHECK(w1 == dict.counts[2]);
      }
    }
  }
}

TEST_CASE("inner atoms embed the sampled generators without truncation") {
  const int n_points = 65;            // r = 6
  const std::vector<int> levels = {3, 4};
  const double b = 0.5;
  for (Family family : {Family::Short3, Family::Db3, Family::CDF97}) {
    CAPTURE(wavedict::family_name(family));
    const WaveletDictionary dict =
        wavedict::wavelet_dict(family, n_points, levels, b);
    const auto pair = wavedict::filters(family);
    const auto gen = wavedict::wavelet_gen(pair.h, pair.g, 6 - levels[0]);

    Eigen::VectorXd psi_by_level[2] = {
        gen.psi, gen.psi(Eigen::seq(0, gen.psi.size() - 1, 2)).eval()};

    int inner_checked = 0;
    for (Eigen::Index col = 0; col < dict.matrix.cols(); ++col) {
      const AtomDescriptor& d = dict.columns[col];
      if (d.locality != AtomLocality::inner) continue;
      const Eigen::VectorXd& expected =
          d.kind == AtomKind::scaling ? gen.phi
                                      : psi_by_level[d.level - levels[0]];
      const long long dest = static_cast<long long>(d.shift) *
                             (1LL << (6 - d.level + static_cast<int>(
                                                        std::log2(b))));
      REQUIRE(dest >= 0);
      REQUIRE(dest + expected.size() <= n_points);
      CHECK((dict.matrix.col(col).segment(dest, expected.size()) - expected)
                .cwiseAbs()
                .maxCoeff() <= 1e-14);
      // everything outside the block is zero
      if (dest > 0) {
        CHECK(dict.matrix.col(col).head(dest).cwiseAbs().maxCoeff() == 0.0);
      }
      const Eigen::Index after = n_points - dest - expected.size();
      if (after > 0) {
        CHECK(dict.matrix.col(col).tail(after).cwiseAbs().maxCoeff() == 0.0);
      }
      ++inner_checked;
    }
    CHECK(inner_checked > 0);
  }
}

TEST_CASE("level shift consistency across doubled segment length") {
  // Values of a level-j atom on the N_b grid reappear as the level-(j+1)
  // atom with the same shift on the (2 N_b - 1) grid; only the clipping
  // at the right segment edge can differ.
  const double b = 0.25;
  const WaveletDictionary coarse =
      wavedict::wavelet_dict(Family::Short3, 33, {2, 3}, b);
  const WaveletDictionary fine =
      wavedict::wavelet_dict(Family::Short3, 65, {3, 4}, b);

  std::map<std::tuple<int, int, int>, Eigen::Index> fine_by_descriptor;
  for (Eigen::Index i = 0; i < fine.matrix.cols(); ++i) {
    const AtomDescriptor& d = fine.columns[i];
    fine_by_descriptor[{d.level, d.shift, static_cast<int>(d.kind)}] = i;
  }

  int matched = 0;
  for (Eigen::Index i = 0; i < coarse.matrix.cols(); ++i) {
    const AtomDescriptor& d = coarse.columns[i];
    const auto hit = fine_by_descriptor.find(
        {d.level + 1, d.shift, static_cast<int>(d.kind)});
    REQUIRE(hit != fine_by_descriptor.end());
    const Eigen::Index j = hit->second;

    std::vector<double> nz_coarse, nz_fine;
    for (Eigen::Index m = 0; m < 33; ++m) {
      if (coarse.matrix(m, i) != 0.0) nz_coarse.push_back(coarse.matrix(m, i));
    }
    for (Eigen::Index m = 0; m < 65; ++m) {
      if (fine.matrix(m, j) != 0.0) nz_fine.push_back(fine.matrix(m, j));
    }
    // The wider segment can keep samples the short one clipped away.
    REQUIRE(nz_fine.size() >= nz_coarse.size());
    for (std::size_t t = 0; t < nz_coarse.size(); ++t) {
      CHECK(std::abs(nz_coarse[t] - nz_fine[t]) <= 1e-12);
    }
    if (coarse.columns[i].locality == AtomLocality::inner) {
      CHECK(fine.columns[j].locality == AtomLocality::inner);
    }
    ++matched;
  }
  CHECK(matched == coarse.matrix.cols());
}

TEST_CASE("basis grid of an orthonormal family is near-orthonormal") {
  // Sampled atoms only approximate continuum orthogonality, hence the
  // loose 2e-2 budget.
  for (Family family : {Family::Db3, Family::Sym4, Family::Coif26}) {
    CAPTURE(wavedict::family_name(family));
    const WaveletDictionary dict =
        wavedict::gen_dict(family, {129, {4}, 1.0});
    std::vector<Eigen::Index> inner;
    for (Eigen::Index i = 0; i < dict.matrix.cols(); ++i) {
      if (dict.columns[i].locality == AtomLocality::inner &&
          dict.columns[i].level == 4) {
        inner.push_back(i);
      }
    }
    REQUIRE(inner.size() > 3);
    for (std::size_t p = 0; p < inner.size(); ++p) {
      for (std::size_t q = 0; q < inner.size(); ++q) {
        const double dot =
            dict.matrix.col(inner[p]).dot(dict.matrix.col(inner[q]));
        const double expected = p == q ? 1.0 : 0.0;
        CHECK(std::abs(dot - expected) <= 2e-2);
      }
    }
  }
}

TEST_CASE("redundant grid has strictly more atoms than the basis grid") {
  const WaveletDictionary basis = wavedict::gen_dict("CW2", {33, {2, 3}, 1.0});
  const WaveletDictionary redundant =
      wavedict::gen_dict("CW2", {33, {2, 3}, 0.25});
  CHECK(redundant.matrix.cols() > basis.matrix.cols());
}

TEST_CASE("dcos basics") {
  const Eigen::MatrixXd one = wavedict::dcos(4, 1);
  REQUIRE(one.cols() == 1);
  CHECK((one.col(0) - Eigen::VectorXd::Constant(4, 0.5)).cwiseAbs().maxCoeff() <=
        1e-15);

  const Eigen::MatrixXd two = wavedict::dcos(4, 2);
  const double pi = std::numbers::pi;
  Eigen::VectorXd expected(4);
  expected << std::cos(pi / 8), std::cos(3 * pi / 8), std::cos(5 * pi / 8),
      std::cos(7 * pi / 8);
  expected /= std::sqrt(2.0);
  CHECK((two.col(1) - expected).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK(wavedict::dcos(16, 0).cols() == 0);
  CHECK_THROWS_AS(wavedict::dcos(4, 5), std::invalid_argument);
}

TEST_CASE("dcos columns are orthonormal") {
  const Eigen::MatrixXd block = wavedict::dcos(50, 10);
  const Eigen::MatrixXd gram = block.transpose() * block;
  CHECK((gram - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() <=
        1e-10);
}

TEST_CASE("norm_dict scales and drops near-zero columns") {
  Eigen::MatrixXd single(2, 1);
  single << 3, 4;
  const Eigen::MatrixXd unit = wavedict::norm_dict(single);
  CHECK(unit(0, 0) == doctest::Approx(0.6));
  CHECK(unit(1, 0) == doctest::Approx(0.8));

  Eigen::MatrixXd with_zero(2, 3);
  with_zero << 2, 0, 0, 0, 0, 1e-6;
  std::vector<Eigen::Index> kept;
  const Eigen::MatrixXd cleaned = wavedict::norm_dict(with_zero, 1.0, &kept);
  REQUIRE(cleaned.cols() == 1);
  CHECK(kept == std::vector<Eigen::Index>{0});
  CHECK(cleaned(0, 0) == doctest::Approx(1.0));

  // delta rescales the target norm to 1/sqrt(delta)
  const Eigen::MatrixXd quarter = wavedict::norm_dict(single, 4.0);
  CHECK(quarter.col(0).norm() == doctest::Approx(0.5));
}

TEST_CASE("gen_dict validation errors") {
  CHECK_THROWS_WITH_AS(wavedict::gen_dict("Short3", {33, {2, 3}, -1.0}),
                       "I expect b>0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      wavedict::gen_dict("Short3", {33, {2, 3}, 1.0 / 3.0}),
      "Choose b such that 1/b = 2^r for some integer r",
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(wavedict::gen_dict("Gauss", {33, {2, 3}, 0.25}),
                       "Unknown name of a wavelet family",
                       std::invalid_argument);
  // all levels pruned as too coarse
  CHECK_THROWS_WITH_AS(
      wavedict::gen_dict("Short3", {33, {0, 1}, 0.25}),
      doctest::Contains("no inner functions"), std::invalid_argument);
  // too few points for the requested fine level
  CHECK_THROWS_WITH_AS(wavedict::gen_dict("Short3", {33, {2, 4}, 0.25}),
                       doctest::Contains("small number of points"),
                       std::invalid_argument);
}

TEST_CASE("gen_dict sorts the level vector") {
  const WaveletDictionary sorted =
      wavedict::gen_dict("Short3", {33, {3, 2}, 0.25});
  CHECK(sorted.matrix.cols() == 97);
  CHECK(sorted.counts == std::vector<int>{27, 27, 43});
}

TEST_CASE("full dictionary concatenates cosine and wavelet blocks") {
  const DictionaryParams pars{33, {2, 3}, 0.25};
  const auto full = wavedict::full_dictionary("Short3", pars, 10);
  CHECK(full.matrix.rows() == 33);
  CHECK(full.matrix.cols() == 107);
  CHECK(full.n_cosine == 10);
  REQUIRE(full.columns.size() == 107);
  CHECK(full.columns[0].kind == AtomKind::cosine);
  CHECK(full.columns[0].shift == 0);
  CHECK(full.columns[9].shift == 9);
  CHECK(full.columns[10].kind == AtomKind::scaling);

  const auto bare = wavedict::full_dictionary("Short3", pars, 0);
  CHECK(bare.matrix.cols() == 97);
  CHECK(bare.columns.front().kind == AtomKind::scaling);

  const auto wide = wavedict::full_dictionary(
      "CDF97", DictionaryParams{500, {3, 4, 5, 6, 7}, 0.25}, 10);
  long total = 10;
  for (int c : wide.counts) total += c;
  CHECK(wide.matrix.cols() == total);
}
