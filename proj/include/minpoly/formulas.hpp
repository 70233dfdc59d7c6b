#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "minpoly/polynomial.hpp"

// Symbolic constructions of closed-form and recursive minimal polynomial
// expressions. Every constructor builds its expression with ring operations
// and relies on canonical reduction; nothing here is hand-expanded.
//
// Arity conventions: x_0, ..., x_{n-1} are the compared values. ismax forms
// put y at variable 0 and x_i at variable i+1. The two-bit ismax uses
// (y_1, y_0, x_{0,1}, x_{0,0}, x_{1,1}, x_{1,0}, ...).

namespace minpoly {

/// delta_t(x) = 1 - (x - t)^(p-1), one variable.
Polynomial delta(std::uint32_t t, PrimeModulus p);
/// L_t(x) = chi(x < t) = sum_{k<t} delta_k(x), for 0 <= t <= p.
Polynomial lowpass(std::uint32_t t, PrimeModulus p);
/// A univariate polynomial placed at variable i of an n-variable ring.
Polynomial in_variable(const Polynomial& univariate, unsigned i, unsigned n);

/// f(p-1-x_0, ..., p-1-x_{n-1}).
Polynomial reflect_inputs(const Polynomial& f);
/// p-1-f(p-1-x): carries max formulas to min formulas and back.
Polynomial involution_conjugate(const Polynomial& f);

// max / min

Polynomial max_general(PrimeModulus p, unsigned n);
Polynomial min_general(PrimeModulus p, unsigned n);
Polynomial max_p2(unsigned n);
Polynomial min_p2(unsigned n);
Polynomial max_p3(unsigned n);
Polynomial min_p3(unsigned n);
Polynomial max_p5_n2();
Polynomial max_p5_n3();
/// Two-variable max for p >= 3.
Polynomial max_n2(PrimeModulus p);

// argmax

Polynomial argmax_digit_general(PrimeModulus p, unsigned n, unsigned r);
Polynomial argmin_digit_general(PrimeModulus p, unsigned n, unsigned r);

/// Builds an n-variable polynomial for a given prime.
using ArityBuilder = std::function<Polynomial(PrimeModulus, unsigned)>;

/// argmax^(r)(x) as argmax^(0) of the maxima of consecutive blocks of p^r
/// inputs, the last block padded with zeros.
Polynomial argmax_block_recurrence(PrimeModulus p, unsigned n, unsigned r,
                                   const ArityBuilder& argmax0_builder,
                                   const ArityBuilder& max_builder);

/// One step of the length recursion: from argmax^(r) and max on n inputs to
/// argmax^(r) on n+1 inputs, through A = argmax^(0)(max(x_0..x_{n-1}), x_n):
///   prefix * (1 - A) + n^(r) * A.
Polynomial argmax_extend_recursive(PrimeModulus p, unsigned r, const Polynomial& prefix,
                                   unsigned n, const Polynomial& argmax0_2var,
                                   const Polynomial& max_prefix);

/// Repeats argmax_extend_recursive from a single input up to n inputs.
Polynomial argmax_by_extension(PrimeModulus p, unsigned n, unsigned r,
                               const Polynomial& argmax0_2var, const ArityBuilder& max_builder);

/// argmax^(r) over F_2 from the prefix-product sum; lengths that are not a
/// multiple of 2^(r+1) are handled by implicit zero padding.
Polynomial argmax_p2(unsigned n, unsigned r);

/// The index set S(r, n) selecting prefix products for inputs x_0..x_n.
std::vector<unsigned> argmax_p2_selector_set(unsigned n, unsigned r);
/// sum_{i in S(r,n)} (1+x_0)...(1+x_i), arity n+1.
Polynomial argmax_p2_selector(unsigned n, unsigned r);

Polynomial argmax_p3_n3();

/// Carry of the base-p addition of two digits.
Polynomial carry_phi1(PrimeModulus p);
/// argmax^(0)(x_0, x_1) for any p.
Polynomial argmax0_n2(PrimeModulus p);

// ismax / nummax

Polynomial ismax_general(PrimeModulus p, unsigned n);
Polynomial nummax0_general(PrimeModulus p, unsigned n);
Polynomial nummax_digit_subsets(PrimeModulus p, unsigned n, unsigned r);
Polynomial ismax_p2(unsigned n);
Polynomial ismax_p3(unsigned n);
Polynomial nummax_p2(unsigned n, unsigned r);
Polynomial ismax_2bit_p2(unsigned n);

}  // namespace minpoly
