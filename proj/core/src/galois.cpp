#include "zmu/galois.hpp"

#include "zmu/error.hpp"

#include <algorithm>

namespace zmu {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// coefficients c[0..deg] with c[deg] != 0, constant term first, values in [0,p)
using Poly = std::vector<int>;

Poly poly_from_encoding(int x, int p) {
    Poly c;
    while (x > 0) {
        c.push_back(x % p);
        x /= p;
    }
    return c;
}

int poly_degree(const Poly& c) { return static_cast<int>(c.size()) - 1; }

int poly_encode(const Poly& c, int p) {
    int x = 0;
    for (std::size_t k = c.size(); k-- > 0;) x = x * p + c[k];
    return x;
}

// f monic, so each leading coefficient cancels in one subtraction step
Poly poly_mod(Poly a, const Poly& f, int p) {
    const int df = poly_degree(f);
    while (poly_degree(a) >= df) {
        const int da = poly_degree(a);
        const int lead = a[da];
        for (int k = 0; k <= df; ++k) {
            int& slot = a[da - df + k];
            slot = ((slot - lead * f[k]) % p + p) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), f, p);
}

bool has_root_mod_p(const Poly& f, int p) {
    for (int r = 0; r < p; ++r) {
        long long acc = 0;
        for (std::size_t k = f.size(); k-- > 0;) acc = (acc * r + f[k]) % p;
        if (acc == 0) return true;
    }
    return false;
}

bool is_irreducible(const Poly& f, int p) {
    const int deg = poly_degree(f);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (has_root_mod_p(f, p)) return false;
    if (deg <= 3) return true;  // no roots rules out all factorizations
    for (int dd = 2; dd * 2 <= deg; ++dd) {
        long long count = 1;
        for (int k = 0; k < dd; ++k) count *= p;
        for (long long enc = 0; enc < count; ++enc) {
            Poly g = poly_from_encoding(static_cast<int>(enc), p);
            g.resize(static_cast<std::size_t>(dd) + 1, 0);
            g[dd] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Field Field::build(int p, int nu, std::optional<std::vector<int>> reduction_poly,
                   std::optional<int> generator) {
    if (!is_prime(p)) throw Error("Field: characteristic must be prime");
    if (nu < 1) throw Error("Field: extension degree must be positive");
    long long order = 1;
    for (int k = 0; k < nu; ++k) {
        order *= p;
        if (order > 2048) throw Error("Field: order above the supported bound 2048");
    }

    Field field;
    field.p_ = p;
    field.nu_ = nu;
    field.q_ = static_cast<int>(order);
    const int q = field.q_;

    Poly f;
    if (reduction_poly) {
        if (static_cast<int>(reduction_poly->size()) != nu + 1)
            throw Error("Field: reduction polynomial must have degree " + std::to_string(nu));
        f = *reduction_poly;
        for (int& c : f) c = ((c % p) + p) % p;
        if (f.back() != 1) throw Error("Field: reduction polynomial must be monic");
        if (!is_irreducible(f, p)) throw Error("Field: reduction polynomial is reducible");
    } else {
        // comparing coefficient vectors high-degree first equals comparing the
        // integer encodings, so the first hit in encoding order is the default
        for (int enc = 0;; ++enc) {
            Poly g = poly_from_encoding(enc, p);
            g.resize(static_cast<std::size_t>(nu) + 1, 0);
            g[nu] = 1;
            if (is_irreducible(g, p)) {
                f = std::move(g);
                break;
            }
        }
    }
    field.poly_ = f;

    field.mul_.assign(static_cast<std::size_t>(q) * q, 0);
    for (int x = 0; x < q; ++x) {
        const Poly a = poly_from_encoding(x, p);
        for (int y = x; y < q; ++y) {
            const Poly b = poly_from_encoding(y, p);
            const int e = poly_encode(poly_mul_mod(a, b, f, p), p);
            field.mul_[static_cast<std::size_t>(x) * q + y] = e;
            field.mul_[static_cast<std::size_t>(y) * q + x] = e;
        }
    }

    auto multiplicative_order = [&field](int x) {
        int ord = 1;
        for (int acc = x; acc != 1; acc = field.mul(acc, x)) ++ord;
        return ord;
    };
    if (generator) {
        if (*generator <= 0 || *generator >= q) throw Error("Field: generator out of range");
        if (multiplicative_order(*generator) != q - 1)
            throw Error("Field: element does not generate the multiplicative group");
        field.generator_ = *generator;
    } else {
        for (int g = 1; g < q; ++g)
            if (multiplicative_order(g) == q - 1) {
                field.generator_ = g;
                break;
            }
    }

    field.pow_.assign(q - 1, 1);
    field.dlog_.assign(q, -1);
    for (int e = 0; e < q - 1; ++e) {
        if (e > 0) field.pow_[e] = field.mul(field.pow_[e - 1], field.generator_);
        field.dlog_[field.pow_[e]] = e;
    }
    return field;
}

int Field::add(int a, int b) const {
    int r = 0;
    int place = 1;
    while (a > 0 || b > 0) {
        r += ((a + b) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    int r = 0;
    int place = 1;
    while (a > 0) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::generator_power(long long e) const {
    const long long m = q_ - 1;
    e %= m;
    if (e < 0) e += m;
    return pow_[static_cast<std::size_t>(e)];
}

int Field::dlog(int x) const {
    if (x <= 0 || x >= q_) throw Error("Field: dlog requires a nonzero element");
    return dlog_[x];
}

std::vector<std::vector<int>> quotient_table(const Field& field) {
    const int n = field.q() - 1;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = field.generator_power(i - j);
    return table;
}

std::vector<std::vector<int>> difference_table(const Field& field) {
    const int q = field.q();
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = field.sub(i, j);
    return table;
}

int position_residue(const Field& field, int x) {
    return mod_reduce(-field.dlog(x), field.q() - 1);
}

Scheme position_scheme(const Field& field, int x) {
    if (x < 0 || x >= field.q()) throw Error("position_scheme: element out of range");
    const int p = field.p();
    const int side = field.q() / p;
    const int pi = field.pi_part(x);
    // a row or column of a table with entries r - c meets the value w where
    // c - r = -w, so the circulant residue is the negated constant term
    const ResidueSet entry(p, {(p - field.const_term(x)) % p});
    Scheme scheme(p, side, side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            if (field.sub(i * p, j * p) == pi) scheme.set_entry(i, j, entry);
    return scheme;
}

} // namespace zmu
