#include <gtest/gtest.h>

#include "sturm/error.hpp"
#include "sturm/perm.hpp"

namespace sturm {
namespace {

const Permutation kSeven({1, 4, 5, 6, 3, 2, 7});

std::vector<int> line(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }
std::vector<int> values(const MorseVector& m) { return {m.values().begin(), m.values().end()}; }

TEST(Parse, WhitespaceAndCommas) {
  EXPECT_EQ(parse_permutation("1 4 5 6 3 2 7"), kSeven);
  EXPECT_EQ(parse_permutation("1,4,5,6,3,2,7"), kSeven);
  EXPECT_EQ(parse_permutation("  1, 4\t5\n6 ,3 2 7\n"), kSeven);
  EXPECT_EQ(parse_permutation("1").size(), 1);
}

TEST(Parse, ZeroBasedShiftsByOne) {
  EXPECT_EQ(parse_permutation("0 3 4 5 2 1 6", IndexBase::zero), kSeven);
}

TEST(Parse, CachesInverse) {
  const Permutation p = parse_permutation("1 4 5 6 3 2 7");
  for (Position k = 1; k <= p.size(); ++k) EXPECT_EQ(p.position_of(p.label_at(k)), k);
}

TEST(Parse, ReportsOffendingToken) {
  auto token_of = [](std::string_view text) {
    try {
      parse_permutation(text);
    } catch (const ParseError& e) {
      return e.token_index();
    }
    return -1;
  };
  EXPECT_EQ(token_of("1 2 2"), 3);
  EXPECT_EQ(token_of("1 x 3"), 2);
  EXPECT_EQ(token_of("1 2.5 3"), 2);
  EXPECT_EQ(token_of("1 5 3"), 2);
  EXPECT_EQ(token_of(""), 0);
  EXPECT_EQ(token_of("  ,, "), 0);
  EXPECT_EQ(token_of("1 2"), 2);
}

TEST(Parse, NotABijection) {
  EXPECT_THROW(parse_permutation("1 2 2"), ParseError);
  EXPECT_THROW(parse_permutation("0 1 2"), ParseError);
}

TEST(Permutation, RejectsBadConstruction) {
  EXPECT_THROW(Permutation({}), Error);
  EXPECT_THROW(Permutation({2, 1}), Error);
  EXPECT_THROW(Permutation({1, 1, 3}), Error);
}

TEST(Permutation, FormatRoundTrip) {
  EXPECT_EQ(format_permutation(kSeven), "1 4 5 6 3 2 7");
  EXPECT_EQ(format_permutation(kSeven, IndexBase::zero), "0 3 4 5 2 1 6");
  EXPECT_EQ(parse_permutation(format_permutation(kSeven)), kSeven);
}

TEST(Inverse, TableLookup) {
  EXPECT_EQ(line(kSeven.inverse()), (std::vector<int>{1, 6, 5, 2, 3, 4, 7}));
  EXPECT_EQ(Permutation::identity(5).inverse(), Permutation::identity(5));
  const Permutation involution({1, 4, 3, 2, 5});
  EXPECT_EQ(involution.inverse(), involution);
  EXPECT_EQ(kSeven.inverse().inverse(), kSeven);
}

TEST(Dissipative, FixesEndpoints) {
  EXPECT_TRUE(is_dissipative(kSeven));
  EXPECT_FALSE(is_dissipative(Permutation({2, 1, 3})));
  EXPECT_TRUE(is_dissipative(Permutation({1})));
}

TEST(Morse, SevenRecursion) {
  EXPECT_EQ(values(morse_indices(kSeven)), (std::vector<int>{0, 1, 2, 1, 0, 1, 0}));
  EXPECT_TRUE(is_morse(kSeven));
}

TEST(Morse, IdentityAlternates) {
  EXPECT_EQ(values(morse_indices(Permutation::identity(5))), (std::vector<int>{0, 1, 0, 1, 0}));
  EXPECT_TRUE(is_morse(Permutation::identity(3)));
}

TEST(Morse, NonMeanderCandidateEndsAwayFromZero) {
  EXPECT_EQ(values(morse_indices(Permutation({1, 3, 2, 4, 5}))), (std::vector<int>{0, 1, 2, 3, 2}));
}

TEST(Morse, DipBelowZeroIsNotMorse) {
  // Label 2 to the left of label 1 is impossible here, so force the dip via
  // label 3 jumping left of label 2 on an even step: 0 -> 1 -> 0 -> -1.
  const Permutation p({1, 4, 3, 2, 5});
  EXPECT_TRUE(is_morse(p));
  const Permutation dips({1, 2, 5, 4, 3, 6, 7});
  EXPECT_EQ(values(morse_indices(dips)), (std::vector<int>{0, 1, 0, -1, 0, 1, 0}));
  EXPECT_FALSE(is_morse(dips));
}

TEST(Klein, TauInvertsAndRelabelsMorse) {
  const Permutation t = apply_tau(kSeven);
  EXPECT_EQ(line(t), (std::vector<int>{1, 6, 5, 2, 3, 4, 7}));
  EXPECT_EQ(values(morse_indices(t)), (std::vector<int>{0, 1, 0, 1, 2, 1, 0}));
  EXPECT_EQ(apply_tau(t), kSeven);
  EXPECT_EQ(apply_tau(Permutation::identity(5)), Permutation::identity(5));
}

TEST(Klein, KappaReversesMorse) {
  const Permutation k = apply_kappa(kSeven);
  EXPECT_EQ(line(k), (std::vector<int>{1, 6, 5, 2, 3, 4, 7}));
  EXPECT_EQ(values(morse_indices(k)), (std::vector<int>{0, 1, 0, 1, 2, 1, 0}));
  EXPECT_EQ(apply_kappa(k), kSeven);
  EXPECT_EQ(apply_kappa(Permutation::identity(7)), Permutation::identity(7));
}

TEST(Klein, RequiresSturm) {
  EXPECT_THROW(apply_tau(Permutation({1, 3, 2, 4, 5})), Error);
  EXPECT_THROW(apply_kappa(Permutation({2, 1, 3})), Error);
  EXPECT_THROW(klein_orbit(Permutation({1, 3, 2, 4, 5})), Error);
}

TEST(Klein, OrbitSizes) {
  const KleinOrbit fig = klein_orbit(kSeven);
  EXPECT_EQ(fig.distinct, 2);
  EXPECT_TRUE(fig.degenerate());
  EXPECT_EQ(fig.members[1], fig.members[2]);
  EXPECT_EQ(fig.members[3], kSeven);

  EXPECT_EQ(klein_orbit(Permutation::identity(3)).distinct, 1);
  EXPECT_EQ(klein_orbit(Permutation({1, 4, 3, 2, 5})).distinct, 1);
}

}  // namespace
}  // namespace sturm
