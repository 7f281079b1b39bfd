#include "leviflat/gaussian.hpp"

#include <cmath>
#include <sstream>

namespace leviflat {

Rat make_rat(Int num, Int den) {
    if (den == 0)
        throw DegenerateInput("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den); // cpp_rational reduces on construction
}

Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(text));
        return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DegenerateInput("rat_from_string: cannot parse '" + text + "'");
    }
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero())
        throw DegenerateInput("GaussianRational: division by zero");
    Rat n = b.norm();
    GaussianRational t = a * b.conj();
    return {t.re / n, t.im / n};
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << "/" << denominator(r);
    return os.str();
}

std::string to_string(const GaussianRational& c) {
    if (c.im == 0)
        return to_string(c.re);
    std::string im_part = (c.im == 1) ? "i" : (c.im == -1) ? "-i" : to_string(c.im) + "*i";
    if (c.re == 0)
        return im_part;
    if (c.im > 0)
        return to_string(c.re) + "+" + im_part;
    return to_string(c.re) + im_part;
}

QPoint conj(const QPoint& p) {
    QPoint out;
    out.reserve(p.size());
    for (const auto& c : p)
        out.push_back(c.conj());
    return out;
}

CPoint conj(const CPoint& p) {
    CPoint out;
    out.reserve(p.size());
    for (const auto& c : p)
        out.push_back(std::conj(c));
    return out;
}

CPoint to_cpoint(const QPoint& p) {
    CPoint out;
    out.reserve(p.size());
    for (const auto& c : p)
        out.push_back(c.to_complex());
    return out;
}

double distance(const CPoint& a, const CPoint& b) {
    double s = 0;
    for (size_t k = 0; k < a.size(); ++k)
        s += std::norm(a[k] - b[k]);
    return std::sqrt(s);
}

double abs2(const CPoint& a) {
    double s = 0;
    for (const auto& c : a)
        s += std::norm(c);
    return s;
}

GMatrix identity_matrix(int n) {
    GMatrix m(n, GVector(n));
    for (int k = 0; k < n; ++k)
        m[k][k] = GaussianRational(1);
    return m;
}

GaussianRational det(const GMatrix& m) {
    GMatrix a = m;
    int n = static_cast<int>(a.size());
    GaussianRational d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0)
            return GaussianRational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d = d * a[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero())
                continue;
            GaussianRational f = a[row][col] / a[col][col];
            for (int j = col; j < n; ++j)
                a[row][j] = a[row][j] - f * a[col][j];
        }
    }
    return d;
}

GMatrix inverse(const GMatrix& m) {
    int n = static_cast<int>(m.size());
    GMatrix a = m;
    GMatrix inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0)
            throw StructuralError("inverse: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        GaussianRational p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            GaussianRational f = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

GMatrix conj(const GMatrix& m) {
    GMatrix out = m;
    for (auto& row : out)
        for (auto& c : row)
            c = c.conj();
    return out;
}

GVector apply(const GMatrix& m, const GVector& v) {
    GVector out(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        GaussianRational acc;
        for (size_t c = 0; c < v.size(); ++c)
            acc = acc + m[r][c] * v[c];
        out[r] = acc;
    }
    return out;
}

} // namespace leviflat
