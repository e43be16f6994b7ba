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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mrdlab/error.hpp"

namespace mrdlab {

/// Field element, encoded as an index in [0, q). Index 0 is the zero
/// element and index 1 is the one element. The index is the base-p
/// packing of the coefficient vector of the residue polynomial, so for
/// prime fields elements coincide with the integers mod p.
using felem = std::uint16_t;

/// A finite field GF(p^e), q = p^e <= 2^16, with table-driven arithmetic.
///
/// Cheap to copy: all tables are shared and immutable after construction,
/// so a Field value may be read concurrently from any number of threads.
/// Fields with q <= 256 carry full add/mul tables; larger fields fall back
/// to log/antilog for multiplication and digit arithmetic for addition.
class Field {
  public:
    /// Builds GF(p^e). When `modulus` is omitted a shipped default
    /// (lexicographically least primitive polynomial, constant term first)
    /// is used; GF(8) defaults to x^3+x+1 and GF(4) to x^2+x+1.
    static Field make(unsigned p, unsigned e,
                      std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// GF(q) for a prime power q (convenience wrapper around make()).
    static Field of_order(unsigned q,
                          std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned p() const { return t_->p; }
    unsigned e() const { return t_->e; }
    unsigned q() const { return t_->q; }
    /// Modulus polynomial coefficients, constant term first, length e+1, monic.
    const std::vector<unsigned>& modulus() const { return t_->modulus; }
    felem primitive_element() const { return t_->primitive; }

    felem add(felem a, felem b) const {
        if (t_->q <= kFullTableLimit) return t_->add_tab[size_t(a) * t_->q + b];
        return add_slow(a, b);
    }
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem neg(felem a) const { return t_->neg_tab[a]; }
    felem mul(felem a, felem b) const {
        if (t_->q <= kFullTableLimit) return t_->mul_tab[size_t(a) * t_->q + b];
        if (a == 0 || b == 0) return 0;
        unsigned s = t_->log_tab[a] + t_->log_tab[b];
        if (s >= t_->q - 1) s -= t_->q - 1;
        return t_->antilog_tab[s];
    }
    felem inv(felem a) const {
        if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
        if (a == 1) return 1;
        return t_->antilog_tab[(t_->q - 1) - t_->log_tab[a]];
    }
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, long long n) const;

    felem log(felem a) const {
        if (a == 0) raise(Errc::DivisionByZero, "log of zero");
        return t_->log_tab[a];
    }
    felem antilog(unsigned n) const { return t_->antilog_tab[n % (t_->q - 1)]; }

    /// Multiplicative order of a nonzero element.
    unsigned mul_order(felem a) const;

    /// All q elements in index order 0,1,...,q-1. This is the canonical
    /// order used by every enumeration in the library.
    std::vector<felem> elements() const;

    bool valid(felem a) const { return a < t_->q; }

    bool operator==(const Field& o) const {
        return t_ == o.t_ || (t_->p == o.t_->p && t_->e == o.t_->e && t_->modulus == o.t_->modulus);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    static constexpr unsigned kFullTableLimit = 256;

    struct Tables {
        unsigned p, e, q;
        std::vector<unsigned> modulus;
        felem primitive;
        std::vector<felem> add_tab, mul_tab; // full tables, q <= 256 only
        std::vector<felem> neg_tab;
        std::vector<felem> log_tab;          // log_tab[0] unused
        std::vector<felem> antilog_tab;      // length q-1
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    felem add_slow(felem a, felem b) const;

    std::shared_ptr<const Tables> t_;
};

/// GF(q)[y]/(g) for an arbitrary base field: the extension GF(q^m) with
/// the polynomial basis {1, beta, ..., beta^{m-1}}. Elements are
/// coefficient vectors over the base field, packed base-q into indices
/// (consistent with the Field packing when the base is a prime field).
class ExtField {
  public:
    /// Default modulus: lexicographically least monic primitive polynomial
    /// of degree m over the base field.
    ExtField(Field base, unsigned m,
             std::optional<std::vector<felem>> modulus = std::nullopt);

    const Field& base() const { return base_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return order_; }
    const std::vector<felem>& modulus() const { return mod_; }

    using Elem = std::vector<felem>; // length m, coefficients over base

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem gen() const; // the class of y, i.e. beta

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t n) const;
    bool is_zero(const Elem& a) const;

    std::uint64_t pack(const Elem& a) const;
    Elem unpack(std::uint64_t idx) const;

  private:
    Field base_;
    unsigned m_;
    std::uint64_t order_;
    std::vector<felem> mod_; // constant first, length m+1, monic
};

} // namespace mrdlab
