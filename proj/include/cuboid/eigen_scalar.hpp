#pragma once

// Lets Eigen dense containers and products work over the exact scalars.
// Only exact operations are meaningful here: no decompositions that rely on
// epsilon or on sqrt.

#include <Eigen/Core>

#include "cuboid/exact_arith.hpp"

namespace Eigen {

template <>
struct NumTraits<cuboid::Rational> : GenericNumTraits<cuboid::Rational> {
  using Real = cuboid::Rational;
  using NonInteger = cuboid::Rational;
  using Nested = cuboid::Rational;
  using Literal = cuboid::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<cuboid::BigInteger> : GenericNumTraits<cuboid::BigInteger> {
  using Real = cuboid::BigInteger;
  using NonInteger = cuboid::Rational;
  using Nested = cuboid::BigInteger;
  using Literal = cuboid::BigInteger;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
