#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

#include "leviflat/errors.hpp"

namespace leviflat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// num/den as a canonical rational (reduced, positive denominator).
Rat make_rat(Int num, Int den);

Rat rat_from_string(const std::string& text);

/// An element of Q(i): re + im*i with exact rational parts.
///
/// The field is closed under conjugation and division, so every symbolic
/// operation in the toolkit stays exact. Equality is plain component
/// comparison because cpp_rational keeps a canonical reduced form.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {} // NOLINT(google-explicit-constructor)
    explicit GaussianRational(Rat r) : re(std::move(r)), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// re^2 + im^2 (the field norm over Q).
    Rat norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    bool operator==(const GaussianRational&) const = default;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
/// Exact division; throws DegenerateInput on zero divisor.
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

std::string to_string(const Rat& r);
std::string to_string(const GaussianRational& c);

/// A point of C^n with exact Gaussian-rational coordinates.
using QPoint = std::vector<GaussianRational>;
/// A point of C^n with floating coordinates.
using CPoint = std::vector<std::complex<double>>;

QPoint conj(const QPoint& p);
CPoint conj(const CPoint& p);
CPoint to_cpoint(const QPoint& p);
double distance(const CPoint& a, const CPoint& b);
double abs2(const CPoint& a);

/// Dense exact matrices for the linear changes of coordinates.
using GMatrix = std::vector<std::vector<GaussianRational>>;
using GVector = std::vector<GaussianRational>;

GMatrix identity_matrix(int n);
GaussianRational det(const GMatrix& m);
/// Throws StructuralError when the matrix is singular.
GMatrix inverse(const GMatrix& m);
GMatrix conj(const GMatrix& m);
GVector apply(const GMatrix& m, const GVector& v);

} // namespace leviflat
