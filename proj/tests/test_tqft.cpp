#include <gtest/gtest.h>

#include <random>

#include "qinv/errors.hpp"
#include "qinv/fusion.hpp"
#include "qinv/tqft.hpp"
#include "support.hpp"
#include "tqft_support.hpp"

using qinv::Cobordism;
using qinv::FrobeniusAlgebra;
using qinv::Generator;
using qinv::QMatrix;
using qinv::Rational;

using qtest::algebras;
using qtest::handle_oracle;
using qtest::kMaxCircles;
using qtest::random_cobordism;

TEST(Frobenius, ValidateExamples) {
  EXPECT_TRUE(qinv::validate_frobenius(qinv::z2_group_algebra()).valid());
  for (int k = 1; k <= 8; ++k) {
    const auto report = qinv::validate_frobenius(qinv::frobenius_from_fusion(qinv::FusionLevel(k)));
    EXPECT_TRUE(report.valid()) << "k=" << k;
  }
  FrobeniusAlgebra broken = qinv::z2_group_algebra();
  broken.mult(0, 0, 0) = 2;
  const auto report = qinv::validate_frobenius(broken);
  ASSERT_FALSE(report.valid());
  bool saw_assoc = false;
  for (const auto& v : report.violations) saw_assoc |= v.find("associativity") != std::string::npos;
  EXPECT_TRUE(saw_assoc);
}

TEST(Frobenius, ValidateDetectsPairingProblems) {
  const FrobeniusAlgebra z2 = qinv::z2_group_algebra();
  std::vector<Rational> mult(8);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) mult[(i * 2 + j) * 2 + k] = z2.mult(i, j, k);
    }
  }
  QMatrix asym = QMatrix::identity(2);
  asym(0, 1) = 1;
  EXPECT_FALSE(qinv::validate_frobenius(FrobeniusAlgebra(2, mult, z2.unit(), asym)).valid());
  QMatrix singular(2, 2);
  singular(0, 0) = 1;
  const auto report = qinv::validate_frobenius(FrobeniusAlgebra(2, mult, z2.unit(), singular));
  ASSERT_FALSE(report.valid());
  EXPECT_NE(report.violations.back().find("Frobenius"), std::string::npos);
}

TEST(Frobenius, FusionAlgebraLevelOne) {
  const FrobeniusAlgebra f = qinv::frobenius_from_fusion(qinv::FusionLevel(1));
  EXPECT_EQ(f.dim(), 2);
  EXPECT_EQ(f.mult(1, 1, 0), 1);
  EXPECT_EQ(f.mult(1, 1, 1), 0);
  EXPECT_EQ(f.counit(), (std::vector<Rational>{1, 0}));
}

TEST(Evaluate, Examples) {
  for (const FrobeniusAlgebra& f : algebras()) {
    const auto d = static_cast<std::size_t>(f.dim());
    EXPECT_EQ(qinv::evaluate(f, Cobordism::identity(1)), QMatrix::identity(d));
    EXPECT_EQ(qinv::evaluate(f, Cobordism(1, {{Generator::kIdentity}})), QMatrix::identity(d));
    const QMatrix sphere = qinv::evaluate(f, Cobordism(0, {{Generator::kCap}, {Generator::kCup}}));
    ASSERT_EQ(sphere.rows(), 1U);
    ASSERT_EQ(sphere.cols(), 1U);
    Rational eps_unit;
    for (std::size_t i = 0; i < d; ++i) eps_unit += f.counit()[i] * f.unit()[i];
    EXPECT_EQ(sphere(0, 0), eps_unit);
    EXPECT_EQ(qinv::closed_surface(f, 1), Rational(f.dim()));
  }
  const Cobordism torus = qinv::cobordism_from_json(nlohmann::json::parse(R"(["cap", ["copants"], ["pants"], "cup"])"));
  EXPECT_EQ(qinv::evaluate(qinv::z2_group_algebra(), torus)(0, 0), 2);
}

TEST(Evaluate, CompositionErrors) {
  EXPECT_THROW(Cobordism(1, {{Generator::kPants}}), qinv::CompositionError);
  EXPECT_THROW(Cobordism(0, {{Generator::kCup}}), qinv::CompositionError);
  EXPECT_THROW(qinv::compose(Cobordism::identity(1), Cobordism::identity(2)), qinv::CompositionError);
  EXPECT_THROW(qinv::glue_pair(qinv::z2_group_algebra(), Cobordism::identity(1), Cobordism::identity(2)),
               qinv::CompositionError);
  EXPECT_THROW(qinv::parse_generator("handle"), qinv::ParseError);
}

TEST(TqftAxioms, Functoriality) {
  auto g = qtest::rng("tqft.functor");
  for (const FrobeniusAlgebra& f : algebras()) {
    for (int t = 0; t < 60; ++t) {
      const Cobordism c1 = random_cobordism(g, std::uniform_int_distribution<int>(0, 2)(g));
      const Cobordism c2 = random_cobordism(g, c1.target());
      ASSERT_EQ(qinv::evaluate(f, qinv::compose(c1, c2)), qinv::evaluate(f, c2) * qinv::evaluate(f, c1));
    }
  }
}

TEST(TqftAxioms, Monoidality) {
  auto g = qtest::rng("tqft.monoidal");
  for (const FrobeniusAlgebra& f : algebras()) {
    for (int t = 0; t < 40; ++t) {
      const Cobordism c1 = random_cobordism(g, std::uniform_int_distribution<int>(0, 1)(g));
      const Cobordism c2 = random_cobordism(g, std::uniform_int_distribution<int>(0, 1)(g));
      if (c1.target() + c2.target() > kMaxCircles) continue;
      ASSERT_EQ(qinv::evaluate(f, qinv::parallel(c1, c2)), qinv::kron(qinv::evaluate(f, c1), qinv::evaluate(f, c2)));
    }
  }
}

TEST(TqftAxioms, Duality) {
  auto g = qtest::rng("tqft.duality");
  for (const FrobeniusAlgebra& f : algebras()) {
    const QMatrix p = f.pairing();
    for (int t = 0; t < 60; ++t) {
      const Cobordism c = random_cobordism(g, std::uniform_int_distribution<int>(0, 2)(g));
      const QMatrix lhs = qinv::evaluate(f, c.reversed());
      const QMatrix rhs = qinv::kron_power(p, c.source()).inverse() * qinv::evaluate(f, c).transpose() *
                          qinv::kron_power(p, c.target());
      ASSERT_EQ(lhs, rhs);
      ASSERT_EQ(c.reversed().reversed(), c);
    }
  }
}

TEST(TqftAxioms, Gluing) {
  auto g = qtest::rng("tqft.gluing");
  for (const FrobeniusAlgebra& f : algebras()) {
    for (int t = 0; t < 60; ++t) {
      const Cobordism left = random_cobordism(g, std::uniform_int_distribution<int>(0, 2)(g));
      const Cobordism right = random_cobordism(g, left.target());
      ASSERT_EQ(qinv::glue_pair(f, left, right), qinv::evaluate(f, qinv::compose(left, right)));
    }
    // Cap against cup is the sphere; the two halves of the torus give dim.
    const Cobordism cap(0, {{Generator::kCap}});
    const Cobordism cup(1, {{Generator::kCup}});
    EXPECT_EQ(qinv::glue_pair(f, cap, cup)(0, 0), qinv::closed_surface(f, 0));
    const Cobordism half_left(0, {{Generator::kCap}, {Generator::kCopants}});
    const Cobordism half_right(2, {{Generator::kPants}, {Generator::kCup}});
    EXPECT_EQ(qinv::glue_pair(f, half_left, half_right)(0, 0), Rational(f.dim()));
  }
}

TEST(TqftAxioms, GenusTwoWordIndependence) {
  using G = Generator;
  const Cobordism a = qinv::closed_surface_word(2);
  const Cobordism b(0, {{G::kCap}, {G::kCopants}, {G::kCopants, G::kIdentity}, {G::kIdentity, G::kPants}, {G::kPants}, {G::kCup}});
  const Cobordism c(0, {{G::kCap}, {G::kCopants}, {G::kCopants, G::kIdentity}, {G::kIdentity, G::kSwap},
                        {G::kPants, G::kIdentity}, {G::kPants}, {G::kCup}});
  for (const FrobeniusAlgebra& f : algebras()) {
    const Rational za = qinv::evaluate(f, a)(0, 0);
    EXPECT_EQ(qinv::evaluate(f, b)(0, 0), za);
    EXPECT_EQ(qinv::evaluate(f, c)(0, 0), za);
  }
}

TEST(ClosedSurface, MatchesHandleOracleAndVerlinde) {
  for (const FrobeniusAlgebra& f : algebras()) {
    for (int genus = 0; genus <= 4; ++genus) EXPECT_EQ(qinv::closed_surface(f, genus), handle_oracle(f, genus));
  }
  EXPECT_EQ(qinv::closed_surface(qinv::z2_group_algebra(), 0), 1);
  EXPECT_EQ(qinv::closed_surface(qinv::z2_group_algebra(), 3), 8);
  for (int k = 1; k <= 6; ++k) {
    const qinv::FusionLevel lv(k);
    const FrobeniusAlgebra f = qinv::frobenius_from_fusion(lv);
    for (int genus = 0; genus <= 3; ++genus) {
      EXPECT_EQ(qinv::closed_surface(f, genus), Rational(qinv::verlinde_dim(lv, genus, {})))
          << "k=" << k << " g=" << genus;
    }
  }
  EXPECT_THROW(qinv::closed_surface(qinv::z2_group_algebra(), -1), qinv::RangeError);
}

TEST(TqftJson, RoundTrip) {
  for (const FrobeniusAlgebra& f : algebras()) {
    const FrobeniusAlgebra back = qinv::frobenius_from_json(nlohmann::json::parse(qinv::to_json(f).dump()));
    EXPECT_EQ(qinv::to_json(back), qinv::to_json(f));
  }
  auto g = qtest::rng("tqft.json");
  for (int t = 0; t < 50; ++t) {
    const Cobordism c = random_cobordism(g, std::uniform_int_distribution<int>(0, 2)(g));
    EXPECT_EQ(qinv::cobordism_from_json(qinv::to_json(c)), c);
  }
  EXPECT_THROW(qinv::frobenius_from_json(nlohmann::json::parse(R"({"dim": 2})")), qinv::ParseError);
  EXPECT_THROW(qinv::cobordism_from_json(nlohmann::json::parse(R"(["cap", "pants"])")), qinv::CompositionError);
}

TEST(QMatrixOps, InverseAndKron) {
  QMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = Rational(1, 3);
  m(1, 1) = 1;
  EXPECT_EQ(m * m.inverse(), QMatrix::identity(2));
  EXPECT_EQ(qinv::kron(QMatrix::identity(2), QMatrix::identity(3)), QMatrix::identity(6));
  EXPECT_EQ(qinv::kron_power(m, 0), QMatrix::identity(1));
  QMatrix z(2, 2);
  EXPECT_THROW(z.inverse(), std::domain_error);
}
