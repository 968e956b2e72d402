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

#include "qcss/codes.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcss/simd.h"

namespace qcss {

namespace {

constexpr std::uint64_t kMaxCosetCandidates = 100'000'000;

bool is_zero_matrix(const Matrix &m) {
    return m.nonzeros() == 0;
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, Matrix generator, std::string name,
                       std::optional<std::size_t> known_distance)
    : field_(std::move(field)),
      generator_(std::move(generator)),
      name_(std::move(name)),
      distance_(std::make_shared<DistanceMemo>()),
      known_distance_(known_distance) {
    if (rank(*field_, generator_) != generator_.rows()) {
        throw std::invalid_argument("generator matrix is rank deficient");
    }
    parity_check_ = nullspace(*field_, generator_);
}

LinearCode::LinearCode(FieldPtr field, Matrix generator, Matrix parity_check, std::string name,
                       std::optional<std::size_t> known_distance)
    : field_(std::move(field)),
      generator_(std::move(generator)),
      parity_check_(std::move(parity_check)),
      name_(std::move(name)),
      distance_(std::make_shared<DistanceMemo>()),
      known_distance_(known_distance) {
    if (generator_.cols() != parity_check_.cols()) {
        throw std::invalid_argument("generator and parity check lengths differ");
    }
    if (rank(*field_, generator_) != generator_.rows() || rank(*field_, parity_check_) != parity_check_.rows() ||
        generator_.rows() + parity_check_.rows() != generator_.cols()) {
        throw std::invalid_argument("generator or parity check is rank deficient");
    }
    if (!is_zero_matrix(mul_transpose(*field_, generator_, parity_check_))) {
        throw std::invalid_argument("G H^T != 0");
    }
}

std::size_t LinearCode::min_distance() const {
    if (known_distance_) {
        return *known_distance_;
    }
    if (k() == 0) {
        throw std::domain_error("the zero code has no nonzero codewords");
    }
    std::call_once(distance_->once, [&] {
        std::size_t best = n();
        for_each_codeword(*this, [&](std::span<const elem_t> w) {
            std::size_t wt = hamming_weight(w);
            if (wt != 0 && wt < best) {
                best = wt;
            }
        });
        distance_->value = best;
    });
    return distance_->value;
}

bool LinearCode::distance_known() const {
    return known_distance_.has_value() || (k() > 0 && codeword_bits(*this) <= kMaxEnumerationBits);
}

bool LinearCode::contains(std::span<const elem_t> word) const {
    auto s = syndrome(*field_, parity_check_, word);
    return hamming_weight(s) == 0;
}

std::string LinearCode::params() const {
    std::ostringstream out;
    out << "[" << n() << "," << k();
    if (distance_known()) {
        out << "," << min_distance();
    }
    out << "]_" << field_->q();
    return out.str();
}

double codeword_bits(const LinearCode &code) {
    return static_cast<double>(code.k()) * std::log2(static_cast<double>(code.field().q()));
}

void for_each_codeword(const LinearCode &code, const std::function<void(std::span<const elem_t>)> &visit) {
    if (codeword_bits(code) > kMaxEnumerationBits) {
        throw std::length_error("code too large for exhaustive enumeration (" + code.params() + ")");
    }
    const Field &f = code.field();
    simd::GfOps ops(f);
    const Matrix &g = code.generator();
    Vec word(code.n(), 0);
    std::vector<elem_t> digits(code.k(), 0);
    visit(word);
    // Odometer over the coefficient vector; each step updates the word by the
    // field difference of one digit times its generator row.
    while (true) {
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == f.q() - 1) {
            simd::gf_axpy(ops, f.neg(digits[i]), g.row(i), word);
            digits[i] = 0;
            i++;
        }
        if (i == digits.size()) {
            return;
        }
        elem_t next = static_cast<elem_t>(digits[i] + 1);
        simd::gf_axpy(ops, f.sub(next, digits[i]), g.row(i), word);
        digits[i] = next;
        visit(word);
    }
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode &code) {
    std::vector<std::uint64_t> a(code.n() + 1, 0);
    for_each_codeword(code, [&](std::span<const elem_t> w) { a[hamming_weight(w)]++; });
    return a;
}

StandardForm standard_form(const LinearCode &code) {
    auto ech = row_reduce(code.field(), code.generator());
    if (ech.pivots.size() != code.k()) {
        throw std::invalid_argument("standard_form: generator is rank deficient");
    }
    StandardForm out;
    std::vector<bool> is_pivot(code.n(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
        out.permutation.push_back(p);
    }
    for (std::size_t c = 0; c < code.n(); c++) {
        if (!is_pivot[c]) {
            out.permutation.push_back(c);
        }
    }
    out.g_std = ech.reduced.permute_columns(out.permutation);
    out.a = Matrix(code.k(), code.n() - code.k());
    for (std::size_t r = 0; r < code.k(); r++) {
        for (std::size_t c = code.k(); c < code.n(); c++) {
            out.a.at(r, c - code.k()) = out.g_std.at(r, c);
        }
    }
    return out;
}

LinearCode dual(const LinearCode &code) {
    std::string name = code.name().empty() ? "" : code.name() + "-dual";
    return LinearCode(code.field_ptr(), code.parity_check(), code.generator(), name, std::nullopt);
}

bool meets_hamming_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t t) {
    using boost::multiprecision::cpp_int;
    cpp_int ball = 0;
    cpp_int binom = 1;
    cpp_int qm1_pow = 1;
    for (std::size_t i = 0; i <= t && i <= n; i++) {
        ball += binom * qm1_pow;
        binom = binom * (n - i) / (i + 1);
        qm1_pow *= (q - 1);
    }
    cpp_int lhs = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(k)) * ball;
    cpp_int rhs = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n));
    return lhs == rhs;
}

bool is_perfect(const LinearCode &code) {
    if (code.k() == 0) {
        return false;
    }
    std::size_t t = (code.min_distance() - 1) / 2;
    return meets_hamming_bound(code.field().q(), code.n(), code.k(), t);
}

bool contains_dual(const LinearCode &code) {
    return is_zero_matrix(mul_transpose(code.field(), code.parity_check(), code.parity_check()));
}

Vec syndrome(const Field &f, const Matrix &parity_check, std::span<const elem_t> word) {
    return mul_vec(f, parity_check, word);
}

namespace {

// Incremental row echelon basis used to test independence modulo a subspace.
class EchelonBasis {
   public:
    EchelonBasis(const Field &f, std::size_t n) : f_(f), ops_(f), n_(n) {
    }

    /// Adds v if it is independent of the current span; returns whether it was.
    bool insert(std::span<const elem_t> v) {
        Vec r(v.begin(), v.end());
        for (std::size_t i = 0; i < rows_.size(); i++) {
            elem_t c = r[pivots_[i]];
            if (c != 0) {
                simd::gf_axpy(ops_, f_.neg(c), rows_[i], r);
            }
        }
        auto it = std::find_if(r.begin(), r.end(), [](elem_t e) { return e != 0; });
        if (it == r.end()) {
            return false;
        }
        std::size_t pivot = static_cast<std::size_t>(it - r.begin());
        simd::gf_scale(ops_, f_.inv(r[pivot]), r);
        // Keep the basis fully reduced so a single pass suffices above.
        for (auto &row : rows_) {
            if (row[pivot] != 0) {
                simd::gf_axpy(ops_, f_.neg(row[pivot]), r, row);
            }
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(pivot);
        return true;
    }

    std::size_t size() const {
        return rows_.size();
    }

   private:
    const Field &f_;
    simd::GfOps ops_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

Matrix coset_leader_matrix(const LinearCode &code) {
    const Field &f = code.field();
    std::size_t n = code.n();
    if (2 * code.k() <= n) {
        throw std::invalid_argument("coset_leader_matrix: K = 2k - n must be at least 1");
    }
    if (!contains_dual(code)) {
        throw std::invalid_argument("coset_leader_matrix: the dual is not contained in the code");
    }
    std::size_t big_k = 2 * code.k() - n;
    const Matrix &h = code.parity_check();
    EchelonBasis basis(f, n);
    for (std::size_t r = 0; r < h.rows(); r++) {
        basis.insert(h.row(r));
    }

    Matrix d(0, n);
    std::uint64_t candidates = 0;
    Vec synd(h.rows(), 0);
    for (std::size_t w = 1; w <= n && d.rows() < big_k; w++) {
        for_each_weight_vector(n, f.q(), w, [&](std::span<const elem_t> word, std::span<const std::size_t> support) {
            if (++candidates > kMaxCosetCandidates) {
                throw std::length_error("coset_leader_matrix: search budget exhausted");
            }
            std::fill(synd.begin(), synd.end(), 0);
            for (auto s : support) {
                for (std::size_t r = 0; r < h.rows(); r++) {
                    synd[r] = f.add(synd[r], f.mul(word[s], h.at(r, s)));
                }
            }
            if (hamming_weight(synd) == 0 && basis.insert(word)) {
                d.append_row(word);
            }
            return d.rows() < big_k;
        });
    }
    if (d.rows() == big_k) {
        return d;
    }
    throw std::logic_error("coset_leader_matrix: fewer independent cosets than expected");
}

namespace {

// Parity-check matrix of the q-ary Hamming code: one column per projective
// point of F_q^m, normalized so the last nonzero coordinate is 1.
Matrix hamming_parity_check(const Field &f, std::uint32_t m) {
    std::uint64_t qm = 1;
    for (std::uint32_t i = 0; i < m; i++) {
        qm *= f.q();
    }
    std::vector<Vec> cols;
    for (std::uint64_t v = 1; v < qm; v++) {
        Vec col(m);
        std::uint64_t x = v;
        for (std::uint32_t i = 0; i < m; i++) {
            col[i] = static_cast<elem_t>(x % f.q());
            x /= f.q();
        }
        std::size_t top = m;
        while (col[top - 1] == 0) {
            top--;
        }
        if (col[top - 1] == 1) {
            cols.push_back(std::move(col));
        }
    }
    Matrix h(m, cols.size());
    for (std::size_t c = 0; c < cols.size(); c++) {
        for (std::uint32_t r = 0; r < m; r++) {
            h.at(r, c) = cols[c][r];
        }
    }
    return h;
}

void check_hamming_args(std::uint32_t q, std::uint32_t m) {
    if (m < 2) {
        throw std::invalid_argument("Hamming/simplex codes need m >= 2");
    }
    double bits = m * std::log2(static_cast<double>(q));
    if (bits > 20) {
        throw std::invalid_argument("Hamming/simplex parameters too large");
    }
}

void check_params(const LinearCode &c, std::size_t n, std::size_t k, std::size_t d) {
    if (c.n() != n || c.k() != k || (c.distance_known() && c.min_distance() != d)) {
        throw std::logic_error("constructed code " + c.params() + " does not have the expected parameters");
    }
}

// Binary or ternary quadratic-residue code of prime length `len`, built from
// g(x) = prod_{r in QR} (x - beta^r) with beta a primitive len-th root of unity
// in the splitting field F_{p^ord}.
LinearCode quadratic_residue_code(std::uint32_t p, std::uint32_t len, std::string name) {
    std::uint32_t ord = 1;
    std::uint64_t pw = p % len;
    while (pw != 1) {
        pw = pw * p % len;
        ord++;
    }
    auto ext = Field::make(p, ord);
    elem_t beta = ext->pow(ext->primitive_element(), (ext->q() - 1) / len);

    std::vector<bool> residue(len, false);
    for (std::uint32_t i = 1; i < len; i++) {
        residue[i * i % len] = true;
    }
    std::vector<elem_t> g{1};  // low-to-high coefficients
    for (std::uint32_t r = 1; r < len; r++) {
        if (!residue[r]) {
            continue;
        }
        elem_t root = ext->pow(beta, r);
        std::vector<elem_t> next(g.size() + 1, 0);
        for (std::size_t i = 0; i < g.size(); i++) {
            next[i + 1] = ext->add(next[i + 1], g[i]);
            next[i] = ext->sub(next[i], ext->mul(root, g[i]));
        }
        g = std::move(next);
    }
    auto base = Field::make(p, 1);
    for (auto c : g) {
        if (c >= p) {
            throw std::logic_error("QR generator polynomial is not defined over the prime field");
        }
    }
    std::size_t deg = g.size() - 1;
    std::size_t k = len - deg;
    Matrix gen(k, len);
    for (std::size_t r = 0; r < k; r++) {
        for (std::size_t i = 0; i <= deg; i++) {
            gen.at(r, r + i) = g[i];
        }
    }
    return LinearCode(base, gen, std::move(name));
}

}  // namespace

LinearCode hamming(std::uint32_t q, std::uint32_t m) {
    check_hamming_args(q, m);
    auto f = Field::of_order(q);
    Matrix h = hamming_parity_check(*f, m);
    Matrix g = nullspace(*f, h);
    std::size_t n = h.cols();
    LinearCode c(f, std::move(g), std::move(h), "hamming-q" + std::to_string(q) + "-m" + std::to_string(m), 3);
    if (c.n() != n || c.k() != n - m) {
        throw std::logic_error("Hamming construction produced wrong dimensions");
    }
    return c;
}

LinearCode simplex(std::uint32_t q, std::uint32_t m) {
    check_hamming_args(q, m);
    auto f = Field::of_order(q);
    Matrix g = hamming_parity_check(*f, m);
    Matrix h = nullspace(*f, g);
    std::size_t d = 1;
    for (std::uint32_t i = 1; i < m; i++) {
        d *= q;
    }
    return LinearCode(f, std::move(g), std::move(h), "simplex-q" + std::to_string(q) + "-m" + std::to_string(m), d);
}

LinearCode golay23() {
    auto c = quadratic_residue_code(2, 23, "golay23");
    check_params(c, 23, 12, 7);
    return c;
}

LinearCode golay11_ternary() {
    auto c = quadratic_residue_code(3, 11, "golay11t");
    check_params(c, 11, 6, 5);
    return c;
}

LinearCode read_code(std::istream &in, const std::string &name) {
    auto next_line = [&](std::string &line) {
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') {
                return true;
            }
        }
        return false;
    };
    std::string line;
    if (!next_line(line) || line.rfind("field:", 0) != 0) {
        throw std::invalid_argument("code file: expected `field: p^m/modulus`");
    }
    std::istringstream fs(line.substr(6));
    std::string desc;
    fs >> desc;
    auto field = Field::parse_descriptor(desc);

    if (!next_line(line)) {
        throw std::invalid_argument("code file: missing `n k` line");
    }
    std::istringstream dims(line);
    long long n = -1;
    long long k = -1;
    if (!(dims >> n >> k) || n <= 0 || k < 0 || k > n) {
        throw std::invalid_argument("code file: malformed `n k` line");
    }
    Matrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (long long r = 0; r < k; r++) {
        if (!next_line(line)) {
            throw std::invalid_argument("code file: missing generator row " + std::to_string(r));
        }
        std::istringstream row(line);
        for (long long c = 0; c < n; c++) {
            long long v = -1;
            if (!(row >> v) || v < 0 || v >= static_cast<long long>(field->q())) {
                throw std::invalid_argument("code file: bad element in row " + std::to_string(r));
            }
            g.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = static_cast<elem_t>(v);
        }
        long long extra;
        if (row >> extra) {
            throw std::invalid_argument("code file: row " + std::to_string(r) + " is too long");
        }
    }
    return LinearCode(field, std::move(g), name);
}

void write_code(std::ostream &out, const LinearCode &code) {
    out << "field: " << code.field().descriptor() << "\n";
    out << code.n() << " " << code.k() << "\n";
    for (std::size_t r = 0; r < code.k(); r++) {
        for (std::size_t c = 0; c < code.n(); c++) {
            out << (c ? " " : "") << code.generator().at(r, c);
        }
        out << "\n";
    }
}

}  // namespace qcss
