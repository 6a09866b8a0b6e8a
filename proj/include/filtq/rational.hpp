#ifndef FILTQ_RATIONAL_HPP
#define FILTQ_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>
#include <string>

namespace filtq {

// Exact arithmetic everywhere: the scalar is a GMP rational, matrices are
// dense Eigen types over it.  No floating point enters any computation.
using Rational = mpq_class;
using Int = mpz_class;

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Canonical text form: "0", "-3", "5/7".
std::string to_string(const Rational& q);

/// Parse "a" or "a/b" with b > 0.  Throws SyntaxError on malformed input.
Rational rational_from_string(const std::string& text);

} // namespace filtq

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

} // namespace Eigen

#endif
