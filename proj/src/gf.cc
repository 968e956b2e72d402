// Copyright 2026 The qcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcss/gf.h"

#include <sstream>
#include <stdexcept>

namespace qcss {

PhaseExponent PhaseExponent::operator+(PhaseExponent other) const {
    return PhaseExponent(value_ + other.value_, p_);
}

PhaseExponent PhaseExponent::operator-(PhaseExponent other) const {
    return PhaseExponent(value_ + p_ - other.value_, p_);
}

PhaseExponent PhaseExponent::operator-() const {
    return PhaseExponent(p_ - value_, p_);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly poly_mod(Poly a, const Poly &b, std::uint32_t p) {
    trim(a);
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; i++) {
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
    Poly f(coeffs.begin(), coeffs.end());
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    std::size_t deg = f.size() - 1;
    if (deg == 1) {
        return true;
    }
    // Every monic divisor candidate of degree d in [1, deg/2].
    for (std::size_t d = 1; d <= deg / 2; d++) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; i++) {
            count *= p;
        }
        for (std::uint64_t idx = 0; idx < count; idx++) {
            Poly g(d + 1);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; i++) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw std::invalid_argument("field extension degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; i++) {
        q *= p;
        if (q > kMaxOrder) {
            throw std::invalid_argument("field order exceeds 2^16");
        }
    }

    std::vector<std::uint32_t> chosen;
    if (modulus.has_value()) {
        chosen = *modulus;
        if (chosen.size() != m + 1 || chosen.back() != 1) {
            throw std::invalid_argument("modulus must be monic of degree m");
        }
        for (auto c : chosen) {
            if (c >= p) {
                throw std::invalid_argument("modulus coefficient out of range");
            }
        }
        if (!is_irreducible(p, chosen)) {
            throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
        }
    } else {
        // Lexicographic order on the coefficient list, c_0 most significant.
        chosen.assign(m + 1, 0);
        chosen[m] = 1;
        bool found = false;
        for (std::uint64_t idx = 0; idx < q && !found; idx++) {
            std::uint64_t v = idx;
            for (std::uint32_t i = m; i-- > 0;) {
                chosen[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            found = is_irreducible(p, chosen);
        }
        if (!found) {
            throw std::logic_error("no irreducible polynomial found");
        }
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = std::move(chosen);
    f->build_tables();
    return f;
}

FieldPtr Field::of_order(std::uint32_t q) {
    if (q < 2) {
        throw std::invalid_argument("field order must be at least 2");
    }
    for (std::uint32_t p = 2; p <= q; p++) {
        if (q % p == 0) {
            std::uint32_t m = 0;
            std::uint32_t rest = q;
            while (rest % p == 0) {
                rest /= p;
                m++;
            }
            if (rest != 1) {
                throw std::invalid_argument(std::to_string(q) + " is not a prime power");
            }
            return make(p, m);
        }
    }
    throw std::invalid_argument("bad field order");
}

FieldPtr Field::parse_descriptor(const std::string &text) {
    auto caret = text.find('^');
    auto slash = text.find('/');
    if (caret == std::string::npos || slash == std::string::npos || slash < caret) {
        throw std::invalid_argument("malformed field descriptor '" + text + "'");
    }
    try {
        auto p = static_cast<std::uint32_t>(std::stoul(text.substr(0, caret)));
        auto m = static_cast<std::uint32_t>(std::stoul(text.substr(caret + 1, slash - caret - 1)));
        std::vector<std::uint32_t> coeffs;
        std::stringstream ss(text.substr(slash + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
        return make(p, m, coeffs);
    } catch (const std::invalid_argument &) {
        throw;
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed field descriptor '" + text + "'");
    }
}

std::string Field::descriptor() const {
    std::string out = std::to_string(p_) + "^" + std::to_string(m_) + "/";
    for (std::size_t i = 0; i < modulus_.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(modulus_[i]);
    }
    return out;
}

std::vector<std::uint32_t> Field::coeffs(elem_t a) const {
    std::vector<std::uint32_t> out(m_);
    std::uint32_t v = a;
    for (std::uint32_t i = 0; i < m_; i++) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

elem_t Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != m_) {
        throw std::invalid_argument("coefficient count must equal m");
    }
    std::uint32_t v = 0;
    for (std::uint32_t i = m_; i-- > 0;) {
        if (coeffs[i] >= p_) {
            throw std::invalid_argument("coefficient out of range");
        }
        v = v * p_ + coeffs[i];
    }
    return static_cast<elem_t>(v);
}

elem_t Field::add_slow(elem_t a, elem_t b) const {
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    std::uint32_t x = a;
    std::uint32_t y = b;
    for (std::uint32_t i = 0; i < m_; i++) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<elem_t>(out);
}

elem_t Field::mul_slow(elem_t a, elem_t b) const {
    auto ca = coeffs(a);
    auto cb = coeffs(b);
    Poly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; i++) {
        for (std::uint32_t j = 0; j < m_; j++) {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
    }
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(m_, 0);
    return from_coeffs(r);
}

void Field::build_tables() {
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; a++) {
        auto c = coeffs(static_cast<elem_t>(a));
        for (auto &x : c) {
            x = (p_ - x) % p_;
        }
        neg_table_[a] = from_coeffs(c);
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; a++) {
            for (std::uint32_t b = 0; b < q_; b++) {
                add_table_[static_cast<std::size_t>(a) * q_ + b] =
                    add_slow(static_cast<elem_t>(a), static_cast<elem_t>(b));
            }
        }
    }

    // Primitive element: order q-1 iff g^((q-1)/r) != 1 for every prime r | q-1.
    std::uint32_t order = q_ - 1;
    auto factors = prime_factors(order);
    auto slow_pow = [&](elem_t g, std::uint64_t e) {
        elem_t result = 1;
        elem_t base = g;
        while (e) {
            if (e & 1) {
                result = mul_slow(result, base);
            }
            base = mul_slow(base, base);
            e >>= 1;
        }
        return result;
    };
    elem_t gen = 1;
    for (std::uint32_t g = 1; g < q_; g++) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(static_cast<elem_t>(g), order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = static_cast<elem_t>(g);
            break;
        }
    }
    exp_table_.resize(order);
    log_table_.assign(q_, 0);
    elem_t cur = 1;
    for (std::uint32_t e = 0; e < order; e++) {
        exp_table_[e] = cur;
        log_table_[cur] = e;
        cur = mul_slow(cur, gen);
    }
    if (cur != 1) {
        throw std::logic_error("multiplicative group construction failed");
    }

    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; a++) {
        inv_table_[a] = exp_table_[(order - log_table_[a]) % order];
    }

    trace_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; a++) {
        elem_t acc = 0;
        elem_t frob = static_cast<elem_t>(a);
        for (std::uint32_t i = 0; i < m_; i++) {
            acc = add(acc, frob);
            frob = pow(frob, p_);
        }
        if (acc >= p_) {
            throw std::logic_error("trace left the prime subfield");
        }
        trace_table_[a] = acc;
    }
}

elem_t Field::inv(elem_t a) const {
    if (a == 0) {
        throw std::domain_error("inversion of zero");
    }
    return inv_table_[a];
}

elem_t Field::pow(elem_t a, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    std::uint64_t order = q_ - 1;
    return exp_table_[(static_cast<std::uint64_t>(log_table_[a]) * (e % order)) % order];
}

std::uint32_t Field::trace_dot(std::span<const elem_t> a, std::span<const elem_t> b) const {
    return trace(dot(a, b));
}

elem_t Field::dot(std::span<const elem_t> a, std::span<const elem_t> b) const {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot product of vectors with different lengths");
    }
    elem_t acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc = add(acc, mul(a[i], b[i]));
    }
    return acc;
}

std::vector<elem_t> Field::mul_row(elem_t a) const {
    std::vector<elem_t> row(q_);
    for (std::uint32_t x = 0; x < q_; x++) {
        row[x] = mul(a, static_cast<elem_t>(x));
    }
    return row;
}

FieldElement::FieldElement(FieldPtr field, elem_t value) : field_(std::move(field)), value_(value) {
    if (!field_ || value_ >= field_->q()) {
        throw std::invalid_argument("field element out of range");
    }
}

const Field &FieldElement::same_field(const FieldElement &other) const {
    if (field_ != other.field_ && !(*field_ == *other.field_)) {
        throw std::invalid_argument("field mismatch");
    }
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    return FieldElement(field_, same_field(other).add(value_, other.value_));
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    return FieldElement(field_, same_field(other).sub(value_, other.value_));
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    return FieldElement(field_, same_field(other).mul(value_, other.value_));
}

FieldElement FieldElement::operator/(const FieldElement &other) const {
    return FieldElement(field_, same_field(other).div(value_, other.value_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg(value_));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_->inv(value_));
}

PhaseExponent FieldElement::trace() const {
    return PhaseExponent(field_->trace(value_), field_->p());
}

bool FieldElement::operator==(const FieldElement &other) const {
    return value_ == other.value_ && *field_ == *other.field_;
}

}  // namespace qcss
