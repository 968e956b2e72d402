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

#include "qcss/oracle.h"

#include "qcss/ftprep.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace qcss {

std::uint64_t max_amplitudes() {
    if (const char *env = std::getenv("QCSS_MAX_AMPLITUDES")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw std::invalid_argument(std::string("QCSS_MAX_AMPLITUDES is not an integer: ") + env);
        }
    }
    return std::uint64_t{1} << 24;
}

namespace {

std::uint64_t checked_size(std::uint32_t q, std::size_t n) {
    std::uint64_t limit = max_amplitudes();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; i++) {
        if (size > limit / q) {
            throw std::length_error("dense state of " + std::to_string(n) + " qudits of order " +
                                    std::to_string(q) + " exceeds " + std::to_string(limit) +
                                    " amplitudes (QCSS_MAX_AMPLITUDES)");
        }
        size *= q;
    }
    return size;
}

std::vector<std::uint64_t> strides(std::uint32_t q, std::size_t n) {
    std::vector<std::uint64_t> s(n + 1, 1);
    for (std::size_t i = 0; i < n; i++) {
        s[i + 1] = s[i] * q;
    }
    return s;
}

std::vector<Vec> enumerate_span(const FieldPtr &f, const Matrix &gen, std::size_t n) {
    if (gen.rows() == 0) {
        return {Vec(n, 0)};
    }
    std::vector<Vec> out;
    for_each_codeword(LinearCode(f, gen), [&](std::span<const elem_t> w) { out.emplace_back(w.begin(), w.end()); });
    return out;
}

std::vector<amp_t> omega_table(std::uint32_t p) {
    std::vector<amp_t> w(p);
    for (std::uint32_t k = 0; k < p; k++) {
        w[k] = omega_power(p, k);
    }
    return w;
}

// Steps a word through F_q^n with digit 0 fastest, matching index order.
void next_word(Vec &y, std::uint32_t q) {
    for (auto &d : y) {
        d = static_cast<elem_t>((d + 1) % q);
        if (d != 0) {
            return;
        }
    }
}

}  // namespace

StateVector::StateVector(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), amps_(checked_size(field_->q(), n), amp_t(0)) {
    amps_[0] = 1;
}

StateVector StateVector::basis(FieldPtr field, std::span<const elem_t> word) {
    StateVector s(std::move(field), word.size());
    s.amps_[0] = 0;
    s.amps_[s.index_of(word)] = 1;
    return s;
}

std::size_t StateVector::index_of(std::span<const elem_t> word) const {
    std::size_t idx = 0;
    for (std::size_t i = word.size(); i-- > 0;) {
        idx = idx * field_->q() + word[i];
    }
    return idx;
}

Vec StateVector::word_of(std::size_t index) const {
    Vec w(n_);
    for (std::size_t i = 0; i < n_; i++) {
        w[i] = static_cast<elem_t>(index % field_->q());
        index /= field_->q();
    }
    return w;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

amp_t omega_power(std::uint32_t p, std::int64_t k) {
    std::int64_t r = ((k % p) + p) % p;
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(r) / p);
}

amp_t inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state sizes differ");
    }
    amp_t s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double exact_distance(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state sizes differ");
    }
    double s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
}

double phase_distance(const StateVector &a, const StateVector &b) {
    amp_t ov = inner_product(b, a);
    amp_t phase = std::abs(ov) > 0 ? ov / std::abs(ov) : amp_t(1);
    double s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(s);
}

StateVector build_codeword(const CssCode &code, std::span<const elem_t> u) {
    if (u.size() != code.k_logical()) {
        throw std::invalid_argument("logical word has the wrong length");
    }
    const Field &f = code.field();
    Vec shift = vec_mul(f, u, code.d_matrix());
    StateVector psi(code.field_ptr(), code.n());
    psi[0] = 0;
    auto words = enumerate_span(code.field_ptr(), code.g_perp(), code.n());
    double a = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (const auto &w : words) {
        psi[psi.index_of(vec_add(f, w, shift))] = a;
    }
    return psi;
}

void apply_gate_dense(const Gate &g, StateVector &psi) {
    const Field &f = psi.field();
    std::uint32_t q = f.q();
    auto st = strides(q, psi.n());
    auto &amps = psi.amplitudes();
    if (g.a >= psi.n() || (g.two_qudit() && g.b >= psi.n())) {
        throw std::out_of_range("gate qudit outside the state");
    }
    std::uint64_t sa = st[g.a];
    switch (g.kind) {
        case GateKind::fourier:
        case GateKind::fourier_inverse: {
            double sign = g.kind == GateKind::fourier ? 1 : -1;
            std::vector<amp_t> kernel(static_cast<std::size_t>(q) * q);
            for (elem_t x = 0; x < q; x++) {
                for (elem_t y = 0; y < q; y++) {
                    kernel[x * q + y] =
                        omega_power(f.p(), static_cast<std::int64_t>(sign * f.trace(f.mul(x, y)))) /
                        std::sqrt(static_cast<double>(q));
                }
            }
            std::vector<amp_t> in(q);
            for (std::uint64_t base = 0; base < amps.size(); base++) {
                if ((base / sa) % q != 0) {
                    continue;
                }
                for (elem_t x = 0; x < q; x++) {
                    in[x] = amps[base + x * sa];
                }
                for (elem_t y = 0; y < q; y++) {
                    amp_t s = 0;
                    for (elem_t x = 0; x < q; x++) {
                        s += kernel[x * q + y] * in[x];
                    }
                    amps[base + y * sa] = s;
                }
            }
            return;
        }
        case GateKind::multiply: {
            if (g.r == 0 || g.r >= q) {
                throw std::invalid_argument("M_r needs a nonzero field element");
            }
            std::vector<amp_t> in(q);
            for (std::uint64_t base = 0; base < amps.size(); base++) {
                if ((base / sa) % q != 0) {
                    continue;
                }
                for (elem_t x = 0; x < q; x++) {
                    in[x] = amps[base + x * sa];
                }
                for (elem_t x = 0; x < q; x++) {
                    amps[base + f.mul(g.r, x) * sa] = in[x];
                }
            }
            return;
        }
        case GateKind::add: {
            std::uint64_t sb = st[g.b];
            std::vector<amp_t> out(amps.size());
            for (std::uint64_t i = 0; i < amps.size(); i++) {
                auto x = static_cast<elem_t>((i / sa) % q);
                auto y = static_cast<elem_t>((i / sb) % q);
                out[i - y * sb + f.add(x, y) * sb] = amps[i];
            }
            amps.swap(out);
            return;
        }
        case GateKind::prep_zero:
        case GateKind::measure_z:
            break;
    }
    throw std::invalid_argument("not a unitary gate: " + std::string(gate_name(g.kind)));
}

void apply_pauli_dense(const PauliOperator &p, StateVector &psi) {
    if (p.n() != psi.n()) {
        throw std::invalid_argument("operator and state sizes differ");
    }
    const Field &f = psi.field();
    std::size_t n = psi.n();
    auto st = strides(f.q(), n);
    auto w = omega_table(f.p());
    std::vector<amp_t> out(psi.size());
    Vec y(n, 0);
    for (std::uint64_t i = 0; i < psi.size(); i++) {
        std::uint64_t image = 0;
        std::uint32_t phase = p.phase().value();
        for (std::size_t j = 0; j < n; j++) {
            image += f.add(y[j], p.x()[j]) * st[j];
            phase += f.trace(f.mul(p.z()[j], y[j]));
        }
        out[image] = w[phase % f.p()] * psi[i];
        next_word(y, f.q());
    }
    psi.amplitudes().swap(out);
}

StateVector simulate_dense(const Circuit &c) {
    StateVector psi(c.field_ptr(), c.n_qudits());
    std::vector<bool> touched(c.n_qudits(), false);
    for (const auto &g : c.ordered_gates()) {
        if (g.kind == GateKind::prep_zero) {
            if (touched[g.a]) {
                throw std::invalid_argument("PrepZero after other gates on the same qudit");
            }
            touched[g.a] = true;
            continue;
        }
        if (g.kind == GateKind::measure_z) {
            throw std::invalid_argument("measurements are not simulated densely");
        }
        touched[g.a] = true;
        if (g.two_qudit()) {
            touched[g.b] = true;
        }
        apply_gate_dense(g, psi);
    }
    return psi;
}

ConjugationReport conjugation_check(const FieldPtr &field) {
    const Field &f = *field;
    std::uint32_t q = f.q();
    std::vector<Gate> gates;
    for (std::size_t a = 0; a < 2; a++) {
        gates.push_back({GateKind::fourier, a});
        gates.push_back({GateKind::fourier_inverse, a});
        for (elem_t r = 1; r < q; r++) {
            gates.push_back({GateKind::multiply, a, kNoQudit, r});
        }
    }
    gates.push_back({GateKind::add, 0, 1});
    gates.push_back({GateKind::add, 1, 0});

    ConjugationReport rep;
    for (const auto &g : gates) {
        for (std::size_t qd = 0; qd < 2; qd++) {
            for (elem_t x = 0; x < q; x++) {
                for (elem_t z = 0; z < q; z++) {
                    if (x == 0 && z == 0) {
                        continue;
                    }
                    for (std::uint32_t a = 0; a < f.p(); a++) {
                        PauliOperator p = PauliOperator::single(field, 2, qd, x, z);
                        p.set_phase(PhaseExponent(a, f.p()));
                        PauliOperator img = conjugate_through(g, p);
                        rep.checked++;
                        double dev = 0;
                        // g P |e> against P' g |e> on every basis state.
                        for (elem_t u = 0; u < q; u++) {
                            for (elem_t v = 0; v < q; v++) {
                                Vec e{u, v};
                                StateVector lhs = StateVector::basis(field, e);
                                apply_pauli_dense(p, lhs);
                                apply_gate_dense(g, lhs);
                                StateVector rhs = StateVector::basis(field, e);
                                apply_gate_dense(g, rhs);
                                apply_pauli_dense(img, rhs);
                                dev = std::max(dev, exact_distance(lhs, rhs));
                            }
                        }
                        rep.max_deviation = std::max(rep.max_deviation, dev);
                        rep.mismatches += dev > 1e-10;
                    }
                }
            }
        }
    }
    return rep;
}

Theorem2Witness theorem2_witness(const CssCode &code, std::span<const elem_t> v, const StateVector *zero) {
    if (!is_perfect(code.base())) {
        throw std::invalid_argument("theorem2_witness needs a perfect base code");
    }
    if (v.size() != code.n()) {
        throw std::invalid_argument("vector has the wrong length");
    }
    const Field &f = code.field();
    // Z_c fixes |0_E> for c in C, so v' is the coset leader of v + C.
    const CosetTable &table = code.table();
    Theorem2Witness out;
    out.witness = table.leader(table.index(syndrome(f, code.g_perp(), v)));
    if (hamming_weight(out.witness) > code.t()) {
        throw std::logic_error("coset leader heavier than t on a perfect code");
    }
    // Both operators are diagonal, so the two states are compared amplitude by
    // amplitude without materializing them.
    std::optional<StateVector> built;
    if (zero == nullptr) {
        built = build_codeword(code, Vec(code.k_logical(), 0));
        zero = &*built;
    }
    auto w = omega_table(f.p());
    std::size_t n = code.n();
    Vec y(n, 0);
    std::optional<amp_t> align;  // rhs -> lhs global phase, from the first support point
    double aligned = 0;
    double diff = 0;
    for (std::uint64_t i = 0; i < zero->size(); i++, next_word(y, f.q())) {
        amp_t a = (*zero)[i];
        if (a == amp_t(0)) {
            continue;
        }
        std::uint32_t pv = 0;
        std::uint32_t pw = 0;
        for (std::size_t j = 0; j < n; j++) {
            pv += f.trace(f.mul(v[j], y[j]));
            pw += f.trace(f.mul(out.witness[j], y[j]));
        }
        amp_t lhs = w[pv % f.p()] * a;
        amp_t rhs = w[pw % f.p()] * a;
        if (!align) {
            align = lhs / rhs;
        }
        aligned += std::norm(lhs - *align * rhs);
        diff += std::norm(lhs - rhs);
    }
    out.deviation = std::sqrt(aligned);
    out.phase_exact = std::sqrt(diff) < 1e-10;
    return out;
}

DualSumReport dual_sum_check(const LinearCode &c) {
    const Field &f = c.field();
    std::size_t n = c.n();
    std::uint64_t total = checked_size(f.q(), n);
    auto perp = enumerate_span(c.field_ptr(), c.parity_check(), n);
    if (static_cast<double>(total) * static_cast<double>(perp.size()) > 0x1.0p32) {
        throw std::length_error("character sums over " + std::to_string(total) + " words and " +
                                std::to_string(perp.size()) + " dual codewords exceed the work guard");
    }
    auto w = omega_table(f.p());
    double expect = static_cast<double>(perp.size());
    DualSumReport rep;
    // dots[k] = y . perp[k], updated digit by digit as y steps through F_q^n.
    Vec y(n, 0);
    Vec dots(perp.size(), 0);
    for (std::uint64_t i = 0; i < total; i++) {
        amp_t s = 0;
        for (auto d : dots) {
            s += w[(f.p() - f.trace(d)) % f.p()];
        }
        double target = c.contains(y) ? expect : 0.0;
        rep.max_deviation = std::max(rep.max_deviation, std::abs(s - target));
        rep.checked++;
        for (std::size_t j = 0; j < n; j++) {
            elem_t next = static_cast<elem_t>((y[j] + 1) % f.q());
            elem_t delta = f.sub(next, y[j]);
            for (std::size_t k = 0; k < perp.size(); k++) {
                dots[k] = f.add(dots[k], f.mul(delta, perp[k][j]));
            }
            y[j] = next;
            if (next != 0) {
                break;
            }
        }
    }
    rep.ok = rep.max_deviation < 1e-9 * std::max(1.0, expect);
    return rep;
}

TeleportDenseReport teleport_encode_dense(const CssCode &code, amp_t a, amp_t b) {
    if (code.k_logical() != 1) {
        throw std::invalid_argument("teleportation encoder needs K = 1");
    }
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw std::invalid_argument("input amplitudes are not normalized");
    }
    const Field &f = code.field();
    std::size_t n = code.n();
    std::uint32_t q = f.q();
    TeleportCircuit tc = build_teleport_circuit(code);

    StateVector psi(code.field_ptr(), 2 * n + 1);
    psi[0] = 0;
    auto words = enumerate_span(code.field_ptr(), code.g_perp(), n);
    double w = 1.0 / static_cast<double>(words.size());
    auto st = strides(q, 2 * n + 1);
    for (const auto &x : words) {
        for (const auto &y : words) {
            std::uint64_t idx = 0;
            for (std::size_t j = 0; j < n; j++) {
                idx += x[j] * st[j] + y[j] * st[n + j];
            }
            psi[idx] += a * w;
            psi[idx + st[2 * n]] += b * w;
        }
    }
    for (const auto &g : tc.circuit.ordered_gates()) {
        if (g.kind != GateKind::measure_z) {
            apply_gate_dense(g, psi);
        }
    }

    // Group amplitudes by the measured (A word, input value) branch.
    std::uint64_t qn = st[n];
    std::map<std::uint64_t, std::vector<amp_t>> branches;
    for (std::uint64_t i = 0; i < psi.size(); i++) {
        if (std::norm(psi[i]) < 1e-24) {
            continue;
        }
        std::uint64_t a_idx = i % qn;
        std::uint64_t b_idx = (i / qn) % qn;
        std::uint64_t in = i / (qn * qn);
        auto &vec = branches[a_idx + qn * in];
        if (vec.empty()) {
            vec.assign(qn, amp_t(0));
        }
        vec[b_idx] += psi[i];
    }

    StateVector target(code.field_ptr(), n);
    {
        StateVector zero = build_codeword(code, Vec{0});
        StateVector one = build_codeword(code, Vec{1});
        for (std::uint64_t i = 0; i < qn; i++) {
            target[i] = a * zero[i] + b * one[i];
        }
    }
    const CosetTable &table = code.table();
    TeleportDenseReport rep;
    rep.min_fidelity = branches.empty() ? 0.0 : 1.0;
    for (auto &[key, vec] : branches) {
        StateVector out(code.field_ptr(), n);
        out.amplitudes() = std::move(vec);
        double prob = out.norm();
        prob *= prob;
        for (auto &amp : out.amplitudes()) {
            amp /= std::sqrt(prob);
        }
        Vec wa = out.word_of(key % qn);
        auto y = static_cast<elem_t>(key / qn);
        elem_t m = code.logical_coords_x(vec_sub(f, wa, table.leader(table.index(syndrome(f, code.g_perp(), wa)))))[0];
        apply_pauli_dense(PauliOperator::x_type(code.field_ptr(), vec_scale(f, f.neg(m), code.d_matrix().row(0))), out);
        apply_pauli_dense(
            PauliOperator::z_type(code.field_ptr(), vec_scale(f, f.neg(y), code.logical_z_matrix().row(0))), out);
        double fid = std::norm(inner_product(target, out));
        rep.min_fidelity = std::min(rep.min_fidelity, fid);
        rep.max_branch_probability = std::max(rep.max_branch_probability, prob);
        rep.branches++;
    }
    return rep;
}

}  // namespace qcss
