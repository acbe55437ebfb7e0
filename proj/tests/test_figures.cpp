#include <gtest/gtest.h>

#include <sstream>

#include "mhp/errors.hpp"
#include "mhp/figures.hpp"

namespace mhp {
namespace {

TEST(ParseRange, ValuesAndErrors) {
  const auto a = parse_range("1.0:0.1:5");
  ASSERT_EQ(a.size(), 41u);
  EXPECT_EQ(a.front(), 1.0);
  EXPECT_EQ(a[7], 1.7);
  EXPECT_EQ(a.back(), 5.0);
  EXPECT_EQ(parse_range("0:0.1:1").size(), 11u);
  EXPECT_EQ(parse_range("0.45"), std::vector<double>{0.45});
  EXPECT_THROW(parse_range("1:0:2"), InputError);
  EXPECT_THROW(parse_range("2:1:1"), InputError);
  EXPECT_THROW(parse_range("1:x:2"), InputError);
  EXPECT_THROW(parse_range("1:2"), InputError);
}

TEST(Figures, AlphaSweepIsVerticalFamily) {
  const auto alphas = parse_range("1.0:0.1:5");
  const auto t = alpha_sweep(alphas, 0.45);
  ASSERT_EQ(t.p.size(), 101u);
  ASSERT_EQ(t.columns.size(), alphas.size());
  EXPECT_EQ(t.header.front(), "p");
  EXPECT_EQ(t.header[8], "alpha=1.7");
  for (std::size_t j = 0; j < alphas.size(); ++j)
    for (std::size_t i = 0; i < t.p.size(); ++i) {
      const double d = t.p[i] - 0.45;
      EXPECT_NEAR(t.columns[j][i], alphas[j] * d * d, 1e-12);
    }
}

TEST(Figures, BetaSweepIsHorizontalFamily) {
  const auto betas = parse_range("0:0.1:1");
  const auto t = beta_sweep(betas, 1.0);
  for (std::size_t j = 0; j < betas.size(); ++j) {
    const auto best = std::min_element(t.columns[j].begin(), t.columns[j].end()) - t.columns[j].begin();
    EXPECT_NEAR(t.p[best], betas[j], 1e-12);
  }
}

TEST(Figures, CsvRoundTripsExactly) {
  const auto t = beta_sweep(parse_range("0:0.25:1"), 3.0, 11);
  std::istringstream in(to_csv(t));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p,beta=0,beta=0.25,beta=0.5,beta=0.75,beta=1");
  std::size_t row = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    EXPECT_EQ(std::stod(cell), t.p[row]);
    for (std::size_t j = 0; std::getline(ls, cell, ','); ++j) EXPECT_EQ(std::stod(cell), t.columns[j][row]);
    ++row;
  }
  EXPECT_EQ(row, 11u);
}

}  // namespace
}  // namespace mhp
