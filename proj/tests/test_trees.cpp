#include <optional>
#include <set>
#include <string>

#include <doctest.h>

#include "permsub/enumerate.hpp"
#include "permsub/errors.hpp"
#include "permsub/subperm.hpp"
#include "permsub/trees.hpp"

using namespace permsub;

namespace {
const char* kTreeText = "(1 L:(3 L:(4 R:(5))) R:(2 R:(6 R:(7 L:(8)))))";
}

TEST_CASE("increasing tree text round-trip") {
  const Tree t = Tree::parse(kTreeText, Tree::Role::increasing);
  CHECK(t.size() == 8);
  CHECK(t.str() == kTreeText);
  CHECK(phi(t).str() == "4 5 3 1 2 6 8 7");
  CHECK(phi_inverse(Permutation::parse("4 5 3 1 2 6 8 7")) == t);
}

TEST_CASE("parse rejects malformed tree text") {
  CHECK_THROWS_AS(Tree::parse("(1", Tree::Role::increasing), invalid_input);
  CHECK_THROWS_AS(Tree::parse("(1) x", Tree::Role::increasing), invalid_input);
  CHECK_THROWS_AS(Tree::parse("(2 L:(1))", Tree::Role::increasing),
                  invalid_input);  // labels must increase downward
  CHECK_THROWS_AS(Tree::parse("(1 L:(3))", Tree::Role::increasing),
                  invalid_input);  // labels must cover 1..n
  CHECK_THROWS_AS(Tree::parse("L:*", Tree::Role::planar), invalid_input);
}

TEST_CASE("phi agrees with iterated leaf collapse") {
  for (int n = 1; n <= 6; ++n)
    for (const Tree& t : all_increasing_trees(n)) {
      const Permutation p = phi(t);
      CHECK(p == phi_collapse(t));
      CHECK(phi_inverse(p) == t);
    }
}

TEST_CASE("phi is a bijection onto whole symmetric groups") {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Tree> trees = all_increasing_trees(n);
    CHECK(Int(static_cast<long>(trees.size())) == factorial(n));
    std::set<std::string> images;
    for (const Tree& t : trees) images.insert(phi(t).str());
    CHECK(images.size() == trees.size());
  }
}

TEST_CASE("sub-permutations are rescaled descendant subtrees") {
  enumerate_class(7, std::nullopt, [](const Permutation& p) {
    const Tree t = phi_inverse(p);
    for (int k = 1; k <= p.size(); ++k) {
      const SubPermutation s = sub_permutation(p, k);
      CHECK(descendant_count(t, k) == s.pattern.size());
      CHECK(phi(subtree_at(t, k)) == s.pattern);
    }
    return true;
  });
}

TEST_CASE("psi maps planar trees onto the 312 avoiders") {
  for (int n = 0; n <= 7; ++n) {
    const std::vector<Tree> trees = all_planar_trees(n);
    CHECK(Int(static_cast<long>(trees.size())) == catalan(n));
    std::set<std::string> images;
    const Permutation s312 = Permutation::parse("3 1 2");
    for (const Tree& t : trees) {
      if (n == 0) continue;
      const Permutation p = psi(t);
      CHECK(p == psi_collapse(t));
      CHECK(avoids(p, s312));
      CHECK(psi_inverse(p) == t);
      images.insert(p.str());
    }
    if (n > 0) CHECK(images.size() == trees.size());
  }
}

TEST_CASE("psi_inverse rejects 312 patterns") {
  CHECK_THROWS_AS(psi_inverse(Permutation::parse("3 1 2")), invalid_input);
  CHECK_THROWS_AS(psi_inverse(Permutation::parse("4 1 3 2")), invalid_input);
  const Permutation s312 = Permutation::parse("3 1 2");
  enumerate_class(6, std::nullopt, [&](const Permutation& p) {
    if (avoids(p, s312)) CHECK(psi(psi_inverse(p)) == p);
    else CHECK_THROWS_AS(psi_inverse(p), invalid_input);
    return true;
  });
}

TEST_CASE("caterpillars and 213 avoidance correspond") {
  for (int n = 1; n <= 7; ++n) {
    int caterpillars = 0;
    const Permutation s213 = Permutation::parse("2 1 3");
    for (const Tree& t : all_planar_trees(n)) {
      const bool cat = is_caterpillar(t);
      caterpillars += cat;
      CHECK(cat == avoids(psi(t), s213));
    }
    CHECK(caterpillars == (1 << (n - 1)));
  }
}

TEST_CASE("strictly binary trees and alternation correspond") {
  for (int n = 1; n <= 7; n += 2) {
    int strict = 0;
    for (const Tree& t : all_planar_trees(n)) {
      const bool sb = is_strictly_binary(t);
      strict += sb;
      CHECK(sb == is_down_up_alternating(psi(t)));
    }
    CHECK(Int(strict) == catalan((n - 1) / 2));
  }
  CHECK_THROWS_AS(is_strictly_binary(all_planar_trees(2).front()),
                  invalid_input);
}

TEST_CASE("subtree statistics") {
  const Tree t = phi_inverse(Permutation::parse("4 5 3 1 2 6 8 7"));
  CHECK(descendant_count(t, 1) == 8);
  CHECK(descendant_count(t, 2) == 4);
  CHECK(descendant_count(t, 5) == 1);
  CHECK(max_subtree_size(t, [](const Tree&) { return true; }) == 8);
  CHECK(max_subtree_size(t, [](const Tree& s) { return s.size() < 3; }) == 2);
  CHECK(max_subtree_size(t, [](const Tree&) { return false; }) == 0);
}
