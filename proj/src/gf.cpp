/*
 * Copyright 2026 The mrdlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mrdlab/gf.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "mrdlab/rational.hpp"

namespace mrdlab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::CodeTooSmall: return "CodeTooSmall";
        case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
        case Errc::NotFullRank: return "NotFullRank";
        case Errc::NotRepresentable: return "NotRepresentable";
        case Errc::EmptySupport: return "EmptySupport";
        case Errc::NotFullRankSupport: return "NotFullRankSupport";
        case Errc::NotADesign: return "NotADesign";
        case Errc::EqualPoints: return "EqualPoints";
        case Errc::BasisMismatch: return "BasisMismatch";
        case Errc::PropertyNotVerified: return "PropertyNotVerified";
        case Errc::BudgetExhausted: return "BudgetExhausted";
        case Errc::IoError: return "IoError";
        case Errc::Internal: return "Internal";
    }
    return "UnknownError";
}

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const Poly& a) { return int(a.size()) - 1; }

// a mod b over GF(p), b monic.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    int db = degree(b);
    while (degree(a) >= db) {
        unsigned c = a.back();
        int shift = degree(a) - db;
        for (int i = 0; i <= db; ++i) {
            unsigned t = (c * b[size_t(i)]) % p;
            unsigned& ai = a[size_t(i + shift)];
            ai = (ai + p - t) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(trim(std::move(r)), mod, p);
}

// Trial factorization: f (monic, degree e) has no monic factor of degree
// 1..e/2. Divisor candidates are enumerated directly; the reducible ones
// among them are harmless extra trials.
bool poly_irreducible(const Poly& f, unsigned p) {
    int e = degree(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    for (int d = 1; d <= e / 2; ++d) {
        // all monic degree-d candidates, low coefficients as an odometer
        std::vector<unsigned> c(size_t(d), 0);
        for (;;) {
            Poly g(c.begin(), c.end());
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
            int i = 0;
            while (i < d && ++c[size_t(i)] == p) c[size_t(i++)] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::uint64_t poly_order_of_x(const Poly& f, unsigned p, std::uint64_t group_order) {
    Poly x = {0, 1};
    Poly acc = {1};
    for (std::uint64_t i = 1; i <= group_order; ++i) {
        acc = poly_mulmod(acc, x, f, p);
        if (acc.size() == 1 && acc[0] == 1) return i;
    }
    return 0;
}

bool poly_primitive(const Poly& f, unsigned p) {
    int e = degree(f);
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    return poly_irreducible(f, p) && poly_order_of_x(f, p, q - 1) == q - 1;
}

// Shipped defaults; everything else falls back to the deterministic
// lex-least search (which reproduces these values).
std::optional<Poly> shipped_modulus(unsigned p, unsigned e) {
    if (p == 2 && e == 2) return Poly{1, 1, 1};       // x^2+x+1
    if (p == 2 && e == 3) return Poly{1, 1, 0, 1};    // x^3+x+1
    if (p == 2 && e == 4) return Poly{1, 1, 0, 0, 1}; // x^4+x+1
    return std::nullopt;
}

Poly default_modulus(unsigned p, unsigned e) {
    if (auto m = shipped_modulus(p, e)) return *m;
    // lexicographically least monic primitive polynomial of degree e
    std::vector<unsigned> c(size_t(e), 0);
    for (;;) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (poly_primitive(f, p)) return f;
        int i = 0;
        while (i < int(e) && ++c[size_t(i)] == p) c[size_t(i++)] = 0;
        if (i == int(e)) break;
    }
    raise(Errc::Internal, "no primitive polynomial found");
}

unsigned smallest_generator_mod_p(unsigned p) {
    for (unsigned g = 1; g < p; ++g) {
        unsigned x = 1, ord = 0;
        do {
            x = (x * g) % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) return g;
    }
    return 1;
}

} // namespace

Field Field::make(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) raise(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
    if (e < 1) raise(Errc::ParameterOutOfRange, "extension degree must be >= 1");
    std::uint64_t q64 = 1;
    for (unsigned i = 0; i < e; ++i) {
        q64 *= p;
        if (q64 > 65536) raise(Errc::FieldTooLarge, "q exceeds 2^16");
    }
    unsigned q = unsigned(q64);

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = q;

    Poly mod;
    if (modulus) {
        mod = Poly(modulus->begin(), modulus->end());
        for (auto& c : mod) c %= p;
        if (degree(trim(mod)) != int(e) || mod.back() != 1)
            raise(Errc::ReducibleModulus, "modulus must be monic of degree e");
        if (!poly_irreducible(mod, p)) raise(Errc::ReducibleModulus, "modulus is reducible");
    } else if (e == 1) {
        unsigned g = smallest_generator_mod_p(p);
        mod = {(p - g) % p, 1}; // x - g
    } else {
        mod = default_modulus(p, e);
    }
    t->modulus = mod;

    // element arithmetic on unpacked digit vectors, used to build the tables
    auto unpack = [&](felem a) {
        std::vector<unsigned> d(e);
        for (unsigned i = 0; i < e; ++i) {
            d[i] = a % p;
            a = felem(a / p);
        }
        return d;
    };
    auto pack = [&](const std::vector<unsigned>& d) {
        unsigned r = 0;
        for (unsigned i = e; i-- > 0;) r = r * p + (i < d.size() ? d[i] : 0);
        return felem(r);
    };
    auto mul_raw = [&](felem a, felem b) {
        Poly pa = trim(unpack(a)), pb = trim(unpack(b));
        Poly r = poly_mulmod(pa, pb, mod, p);
        std::vector<unsigned> d(r.begin(), r.end());
        return pack(d);
    };

    t->neg_tab.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        auto d = unpack(felem(a));
        for (auto& x : d) x = (p - x) % p;
        t->neg_tab[a] = pack(d);
    }

    // primitive element: x (index p) when it generates, else the least
    // element of full multiplicative order
    auto order_of = [&](felem a) -> unsigned {
        felem x = 1;
        for (unsigned i = 1; i <= q - 1; ++i) {
            x = mul_raw(x, a);
            if (x == 1) return i;
        }
        return 0;
    };
    felem prim = 0;
    if (e > 1 && order_of(felem(p)) == q - 1) {
        prim = felem(p);
    } else {
        for (unsigned a = 1; a < q; ++a)
            if (order_of(felem(a)) == q - 1) {
                prim = felem(a);
                break;
            }
    }
    if (prim == 0) raise(Errc::Internal, "no primitive element found");
    t->primitive = prim;

    t->antilog_tab.resize(q - 1);
    t->log_tab.assign(q, 0);
    felem x = 1;
    for (unsigned i = 0; i < q - 1; ++i) {
        t->antilog_tab[i] = x;
        t->log_tab[x] = felem(i);
        x = mul_raw(x, prim);
    }
    if (x != 1) raise(Errc::Internal, "primitive element order mismatch");

    if (q <= kFullTableLimit) {
        t->add_tab.resize(size_t(q) * q);
        t->mul_tab.resize(size_t(q) * q);
        for (unsigned a = 0; a < q; ++a) {
            auto da = unpack(felem(a));
            for (unsigned b = 0; b < q; ++b) {
                auto db = unpack(felem(b));
                std::vector<unsigned> s(e);
                for (unsigned i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
                t->add_tab[size_t(a) * q + b] = pack(s);
                t->mul_tab[size_t(a) * q + b] = mul_raw(felem(a), felem(b));
            }
        }
    }

    return Field(std::move(t));
}

Field Field::of_order(unsigned q, std::optional<std::vector<unsigned>> modulus) {
    for (unsigned p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p != 0) continue;
        unsigned e = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) break;
        return make(p, e, std::move(modulus));
    }
    raise(Errc::ParameterOutOfRange, "q = " + std::to_string(q) + " is not a prime power");
}

felem Field::add_slow(felem a, felem b) const {
    unsigned p = t_->p, e = t_->e;
    unsigned r = 0, mult = 1;
    for (unsigned i = 0; i < e; ++i) {
        r += ((a % p + b % p) % p) * mult;
        a = felem(a / p);
        b = felem(b / p);
        mult *= p;
    }
    return felem(r);
}

felem Field::pow(felem a, long long n) const {
    if (a == 0) {
        if (n == 0) return 1;
        if (n < 0) raise(Errc::DivisionByZero, "negative power of zero");
        return 0;
    }
    unsigned g = t_->q - 1;
    long long r = n % g;
    if (r < 0) r += g;
    unsigned lg = (unsigned(t_->log_tab[a]) * unsigned(r)) % g;
    return t_->antilog_tab[lg];
}

unsigned Field::mul_order(felem a) const {
    if (a == 0) raise(Errc::DivisionByZero, "order of zero");
    unsigned g = t_->q - 1;
    unsigned la = t_->log_tab[a];
    // order = (q-1)/gcd(q-1, log a)
    unsigned x = g, y = la;
    while (y) {
        unsigned tmp = x % y;
        x = y;
        y = tmp;
    }
    return g / x;
}

std::vector<felem> Field::elements() const {
    std::vector<felem> r(t_->q);
    for (unsigned i = 0; i < t_->q; ++i) r[i] = felem(i);
    return r;
}

ExtField::ExtField(Field base, unsigned m, std::optional<std::vector<felem>> modulus)
    : base_(std::move(base)), m_(m) {
    if (m < 1) raise(Errc::ParameterOutOfRange, "extension degree must be >= 1");
    order_ = 1;
    for (unsigned i = 0; i < m; ++i) order_ *= base_.q();

    auto is_one = [&](const Elem& a) {
        if (a[0] != 1) return false;
        for (unsigned i = 1; i < m_; ++i)
            if (a[i]) return false;
        return true;
    };
    auto primitive = [&](const std::vector<felem>& mod) {
        mod_ = mod;
        Elem x = zero();
        if (m_ == 1) {
            x[0] = base_.sub(0, mod[0]); // the class of y is the root of y + c0
        } else {
            x[1] = 1;
        }
        Elem acc = one();
        for (std::uint64_t i = 1; i < order_ - 1; ++i) {
            acc = mul(acc, x);
            if (is_one(acc)) return false;
        }
        return true;
    };
    auto irreducible = [&](const std::vector<felem>& mod) {
        // no root test shortcut; trial division over the base field
        for (unsigned d = 1; d <= m / 2; ++d) {
            std::vector<felem> c(d, 0);
            for (;;) {
                // divide mod by y^d + c_{d-1} y^{d-1} + ... + c_0, checking remainder
                std::vector<felem> rem(mod.begin(), mod.end());
                for (int i = int(m) - int(d); i >= 0; --i) {
                    felem coef = rem[size_t(i) + d];
                    if (coef) {
                        rem[size_t(i) + d] = 0;
                        for (unsigned j = 0; j < d; ++j)
                            rem[size_t(i) + j] = base_.sub(rem[size_t(i) + j], base_.mul(coef, c[j]));
                    }
                }
                bool zero_rem = true;
                for (unsigned j = 0; j < d; ++j)
                    if (rem[j]) zero_rem = false;
                if (zero_rem) return false;
                unsigned i = 0;
                while (i < d && ++c[i] == base_.q()) c[i++] = 0;
                if (i == d) break;
            }
        }
        return true;
    };

    if (modulus) {
        if (modulus->size() != m + 1 || (*modulus)[m] != 1)
            raise(Errc::ReducibleModulus, "modulus must be monic of degree m");
        if (!irreducible(*modulus)) raise(Errc::ReducibleModulus, "modulus is reducible");
        mod_ = *modulus;
        return;
    }
    // prime base: reuse the Field defaults so packings agree
    if (base_.e() == 1) {
        Field big = Field::make(base_.p(), m);
        std::vector<felem> mod(big.modulus().begin(), big.modulus().end());
        mod_ = mod;
        return;
    }
    std::vector<felem> c(m, 0);
    for (;;) {
        std::vector<felem> f(c.begin(), c.end());
        f.push_back(1);
        if (irreducible(f) && primitive(f)) {
            mod_ = f;
            return;
        }
        unsigned i = 0;
        while (i < m && ++c[i] == base_.q()) c[i++] = 0;
        if (i == m) break;
    }
    raise(Errc::Internal, "no primitive polynomial over base field found");
}

ExtField::Elem ExtField::one() const {
    Elem r(m_, 0);
    r[0] = 1;
    return r;
}

ExtField::Elem ExtField::gen() const {
    Elem r(m_, 0);
    if (m_ == 1)
        r[0] = base_.sub(0, mod_[0]);
    else
        r[1] = 1;
    return r;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    std::vector<felem> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < m_; ++j)
            if (b[j]) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
        felem coef = prod[d];
        if (!coef) continue;
        prod[d] = 0;
        for (unsigned j = 0; j < m_; ++j)
            prod[d - m_ + j] = base_.sub(prod[d - m_ + j], base_.mul(coef, mod_[j]));
    }
    return Elem(prod.begin(), prod.begin() + m_);
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t n) const {
    Elem r = one(), base = a;
    while (n) {
        if (n & 1u) r = mul(r, base);
        base = mul(base, base);
        n >>= 1u;
    }
    return r;
}

bool ExtField::is_zero(const Elem& a) const {
    for (unsigned i = 0; i < m_; ++i)
        if (a[i]) return false;
    return true;
}

std::uint64_t ExtField::pack(const Elem& a) const {
    std::uint64_t r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * base_.q() + a[i];
    return r;
}

ExtField::Elem ExtField::unpack(std::uint64_t idx) const {
    Elem r(m_);
    for (unsigned i = 0; i < m_; ++i) {
        r[i] = felem(idx % base_.q());
        idx /= base_.q();
    }
    return r;
}

Rational rat_parse(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, pos)), Int(s.substr(pos + 1)));
    } catch (const std::exception&) {
        raise(Errc::IoError, "bad rational: " + s);
    }
}

} // namespace mrdlab
