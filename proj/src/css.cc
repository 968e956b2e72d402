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

#include "qcss/css.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcss {

namespace {

constexpr double kMaxTableBits = 22.0;
constexpr double kMaxPerpBits = 22.0;
constexpr double kMaxCoverageBits = 24.0;

}  // namespace

CosetTable::CosetTable(const Field &f, const Matrix &check) : q_(f.q()) {
    std::size_t r = check.rows();
    std::size_t n = check.cols();
    if (static_cast<double>(r) * std::log2(static_cast<double>(q_)) > kMaxTableBits) {
        throw std::length_error("coset table too large");
    }
    std::size_t size = 1;
    for (std::size_t i = 0; i < r; i++) {
        size *= q_;
    }
    leaders_.assign(size, Vec{});
    weights_.assign(size, 0);
    leaders_[0] = Vec(n, 0);
    std::size_t filled = 1;
    Vec synd(r);
    for (std::size_t w = 1; w <= n && filled < size; w++) {
        for_each_weight_vector(n, q_, w, [&](std::span<const elem_t> word, std::span<const std::size_t> support) {
            std::fill(synd.begin(), synd.end(), 0);
            for (auto s : support) {
                for (std::size_t i = 0; i < r; i++) {
                    synd[i] = f.add(synd[i], f.mul(word[s], check.at(i, s)));
                }
            }
            std::size_t idx = index(synd);
            if (idx != 0 && leaders_[idx].empty()) {
                leaders_[idx].assign(word.begin(), word.end());
                weights_[idx] = w;
                filled++;
            }
            return filled < size;
        });
    }
    if (filled < size) {
        throw std::logic_error("coset table: check matrix is rank deficient");
    }
}

std::size_t CosetTable::index(std::span<const elem_t> syndrome) const {
    std::size_t idx = 0;
    for (std::size_t i = syndrome.size(); i-- > 0;) {
        idx = idx * q_ + syndrome[i];
    }
    return idx;
}

std::size_t CosetTable::max_weight() const {
    return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

CssCode CssCode::from_classical(const LinearCode &c) {
    if (!contains_dual(c)) {
        throw std::invalid_argument("CSS construction needs C^perp inside C");
    }
    if (2 * c.k() <= c.n()) {
        throw std::invalid_argument("CSS construction needs K = 2k - n >= 1");
    }
    CssCode code(c);
    const Field &f = c.field();
    LinearCode perp = dual(c);
    code.g_perp_std_ = standard_form(perp);
    code.g_perp_ = row_reduce(f, perp.generator()).reduced;
    code.d_matrix_ = coset_leader_matrix(c);
    code.d_ = hamming_weight(code.d_matrix_.row(0));

    // Z = (D D^T)^{-1} D gives D Z^T = I because D D^T is symmetric.
    Matrix gram = mul_transpose(f, code.d_matrix_, code.d_matrix_);
    Matrix gram_inv = inverse(f, gram);
    Matrix z(0, c.n());
    for (std::size_t i = 0; i < gram_inv.rows(); i++) {
        z.append_row(vec_mul(f, gram_inv.row(i), code.d_matrix_));
    }
    code.logical_z_ = std::move(z);

    code.table_ = CosetTable(f, code.g_perp_);
    if (codeword_bits(perp) <= kMaxPerpBits) {
        for_each_codeword(perp, [&](std::span<const elem_t> w) { code.perp_words_.emplace_back(w.begin(), w.end()); });
    }
    return code;
}

std::string CssCode::params() const {
    std::ostringstream out;
    out << "[[" << n() << "," << k_logical() << "," << d_ << "]]_" << field().q();
    return out.str();
}

std::vector<PauliOperator> CssCode::x_stabilizers() const {
    std::vector<PauliOperator> out;
    for (std::size_t r = 0; r < g_perp_.rows(); r++) {
        out.push_back(PauliOperator::x_type(field_ptr(), g_perp_.row_vec(r)));
    }
    return out;
}

std::vector<PauliOperator> CssCode::z_stabilizers() const {
    std::vector<PauliOperator> out;
    for (std::size_t r = 0; r < g_perp_.rows(); r++) {
        out.push_back(PauliOperator::z_type(field_ptr(), g_perp_.row_vec(r)));
    }
    return out;
}

std::vector<PauliOperator> CssCode::logical_x() const {
    std::vector<PauliOperator> out;
    for (std::size_t r = 0; r < d_matrix_.rows(); r++) {
        out.push_back(PauliOperator::x_type(field_ptr(), d_matrix_.row_vec(r)));
    }
    return out;
}

std::vector<PauliOperator> CssCode::logical_z() const {
    std::vector<PauliOperator> out;
    for (std::size_t r = 0; r < logical_z_.rows(); r++) {
        out.push_back(PauliOperator::z_type(field_ptr(), logical_z_.row_vec(r)));
    }
    return out;
}

std::size_t CssCode::weight_mod_c(std::span<const elem_t> v) const {
    return table_.leader_weight(table_.index(syndrome(field(), g_perp_, v)));
}

std::size_t CssCode::weight_mod_perp(std::span<const elem_t> v) const {
    if (perp_words_.empty()) {
        throw std::length_error("weight_mod_perp: C^perp too large to enumerate");
    }
    const Field &f = field();
    std::size_t best = v.size();
    for (const auto &c : perp_words_) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < v.size() && w < best; i++) {
            w += f.add(v[i], c[i]) != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

Vec CssCode::logical_coords_x(std::span<const elem_t> v) const {
    return mul_vec(field(), logical_z_, v);
}

Vec CssCode::logical_coords_z(std::span<const elem_t> v) const {
    return mul_vec(field(), d_matrix_, v);
}

void append_encoder(Circuit &c, const CssCode &code, std::span<const std::size_t> qudits) {
    if (qudits.size() != code.n()) {
        throw std::invalid_argument("append_encoder: block size mismatch");
    }
    const Field &f = code.field();
    const StandardForm &sf = code.g_perp_standard();
    std::size_t rows = sf.g_std.rows();
    auto at = [&](std::size_t permuted) { return qudits[sf.permutation[permuted]]; };
    for (auto q : qudits) {
        c.schedule(GateKind::prep_zero, q);
    }
    for (std::size_t i = 0; i < rows; i++) {
        c.schedule(GateKind::fourier, at(i));
    }
    for (std::size_t i = 0; i < rows; i++) {
        for (std::size_t j = 0; j < sf.a.cols(); j++) {
            elem_t r = sf.a.at(i, j);
            if (r == 0) {
                continue;
            }
            std::size_t control = at(i);
            std::size_t target = at(rows + j);
            if (r != 1) {
                c.schedule(GateKind::multiply, target, kNoQudit, f.inv(r));
            }
            c.schedule(GateKind::add, control, target);
            if (r != 1) {
                c.schedule(GateKind::multiply, target, kNoQudit, r);
            }
        }
    }
}

Circuit encoding_circuit(const CssCode &code) {
    Circuit c(code.field_ptr(), code.n());
    std::vector<std::size_t> qudits(code.n());
    std::iota(qudits.begin(), qudits.end(), 0);
    append_encoder(c, code, qudits);
    Matrix support = code.g_perp();
    c.add_block(Block{"code", qudits, "perp", std::move(support)});
    return c;
}

std::string_view outcome_name(DecodeOutcome o) {
    switch (o) {
        case DecodeOutcome::no_error:
            return "no_error";
        case DecodeOutcome::corrected:
            return "corrected";
        case DecodeOutcome::logical_x:
            return "logical_x";
        case DecodeOutcome::logical_z:
            return "logical_z";
        case DecodeOutcome::logical_both:
            return "logical_both";
        case DecodeOutcome::detected_uncorrectable:
            return "detected_uncorrectable";
    }
    return "?";
}

DecodeResult ideal_decode(const CssCode &code, const PauliOperator &residual, DecodeMode mode) {
    if (residual.n() != code.n()) {
        throw std::invalid_argument("ideal_decode: residual does not match the block size");
    }
    const Field &f = code.field();
    const CosetTable &table = code.table();
    DecodeResult out{DecodeOutcome::no_error, Vec(code.k_logical(), 0), Vec(code.k_logical(), 0)};
    if (residual.weight() == 0) {
        return out;
    }
    std::size_t ix = table.index(syndrome(f, code.g_perp(), residual.x()));
    std::size_t iz = table.index(syndrome(f, code.g_perp(), residual.z()));
    bool x_heavy = table.leader_weight(ix) > code.t();
    bool z_heavy = table.leader_weight(iz) > code.t();
    if (!x_heavy) {
        out.x_shift = code.logical_coords_x(vec_sub(f, residual.x(), table.leader(ix)));
    }
    if (!z_heavy) {
        out.z_shift = code.logical_coords_z(vec_sub(f, residual.z(), table.leader(iz)));
    }
    bool lx = !x_heavy && hamming_weight(out.x_shift) != 0;
    bool lz = mode == DecodeMode::any && !z_heavy && hamming_weight(out.z_shift) != 0;
    out.x_fail = x_heavy || lx;
    out.z_fail = z_heavy || lz;
    if (x_heavy || z_heavy) {
        out.outcome = DecodeOutcome::detected_uncorrectable;
    } else if (lx && lz) {
        out.outcome = DecodeOutcome::logical_both;
    } else if (lx) {
        out.outcome = DecodeOutcome::logical_x;
    } else if (lz) {
        out.outcome = DecodeOutcome::logical_z;
    } else {
        out.outcome = DecodeOutcome::corrected;
    }
    return out;
}

bool theorem1_coverage(const CssCode &code, bool allow_shortcut) {
    const LinearCode &c = code.base();
    std::uint32_t q = code.field().q();
    double bits = static_cast<double>(code.n()) * std::log2(static_cast<double>(q));
    if (bits > kMaxCoverageBits) {
        if (!allow_shortcut) {
            throw std::length_error("theorem1_coverage: q^n too large for exhaustive tiling");
        }
        return meets_hamming_bound(q, code.n(), c.k(), code.t());
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < code.n(); i++) {
        total *= q;
    }
    std::vector<std::uint8_t> hits(total, 0);
    const Field &f = code.field();
    std::vector<Vec> ball{Vec(code.n(), 0)};
    for (std::size_t w = 1; w <= code.t(); w++) {
        for_each_weight_vector(code.n(), q, w, [&](std::span<const elem_t> a, std::span<const std::size_t>) {
            ball.emplace_back(a.begin(), a.end());
            return true;
        });
    }
    bool overlap = false;
    for_each_codeword(c, [&](std::span<const elem_t> word) {
        for (const auto &a : ball) {
            std::size_t idx = 0;
            for (std::size_t i = code.n(); i-- > 0;) {
                idx = idx * q + f.add(word[i], a[i]);
            }
            if (hits[idx]++ != 0) {
                overlap = true;
            }
        }
    });
    if (overlap) {
        return false;
    }
    return std::all_of(hits.begin(), hits.end(), [](std::uint8_t h) { return h == 1; });
}

bool meets_quantum_hamming_bound(const CssCode &code) {
    using boost::multiprecision::cpp_int;
    std::uint32_t q = code.field().q();
    cpp_int ball = 0;
    cpp_int binom = 1;
    cpp_int pw = 1;
    for (std::size_t i = 0; i <= code.t(); i++) {
        ball += binom * pw;
        binom = binom * (code.n() - i) / (i + 1);
        pw *= cpp_int(q) * q - 1;
    }
    cpp_int room = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(code.n() - code.k_logical()));
    return room >= ball;
}

}  // namespace qcss
