#pragma once

#include "hyshift/exact_value.hpp"
#include "hyshift/half_int.hpp"

namespace hyshift::angular {

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3), evaluated exactly with the Racah
/// single sum.
///
/// Returns zero when the m's do not sum to zero or the triangle condition
/// fails. Throws std::invalid_argument for a negative j, |m| > j, or an m
/// whose integer/half-integer character differs from its j.
ExactValue wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// Integer-argument convenience overload.
ExactValue wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

/// Closed form of (l 2 l; -m 0 m) for l >= 1:
///   (-1)^(l-m) 2[3m^2 - l(l+1)] / sqrt((2l+3)(2l+2)(2l+1)(2l)(2l-1)).
ExactValue tabulated_3j_l2l(int l, int m);

/// Gaunt coefficient <Y_lp^mp | Y_L^M | Y_l^m> over the unit sphere,
/// Condon-Shortley phases. The 1/sqrt(4 pi) stays inside the radicand.
ExactValue gaunt(int lp, int mp, int L, int M, int l, int m);

/// True when |a - b| <= c <= a + b and a + b + c is an integer.
bool triangle(HalfInt a, HalfInt b, HalfInt c);

}  // namespace hyshift::angular
