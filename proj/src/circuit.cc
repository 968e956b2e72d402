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

#include "qcss/circuit.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcss/simd.h"

namespace qcss {

std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::fourier:
            return "F";
        case GateKind::fourier_inverse:
            return "FINV";
        case GateKind::multiply:
            return "M";
        case GateKind::add:
            return "ADD";
        case GateKind::prep_zero:
            return "PREP";
        case GateKind::measure_z:
            return "MEASURE";
    }
    return "?";
}

GateKind parse_gate_name(std::string_view s) {
    for (auto k : {GateKind::fourier, GateKind::fourier_inverse, GateKind::multiply, GateKind::add,
                   GateKind::prep_zero, GateKind::measure_z}) {
        if (gate_name(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate kind `" + std::string(s) + "`");
}

Circuit::Circuit(FieldPtr field, std::size_t n_qudits) : field_(std::move(field)), n_(n_qudits), next_free_(n_qudits, 0) {
}

std::size_t Circuit::depth() const {
    return busy_.size();
}

void Circuit::validate(const Gate &g) const {
    if (g.a >= n_) {
        throw std::out_of_range("gate qudit out of range");
    }
    if (g.kind == GateKind::add) {
        if (g.b >= n_) {
            throw std::out_of_range("ADD target out of range");
        }
        if (g.a == g.b) {
            throw std::invalid_argument("ADD needs distinct control and target");
        }
    } else if (g.b != kNoQudit) {
        throw std::invalid_argument("single-qudit gate given a second qudit");
    }
    if (g.kind == GateKind::multiply && (g.r == 0 || g.r >= field_->q())) {
        throw std::invalid_argument("M_r needs a nonzero field element r");
    }
    if (g.time_step < busy_.size()) {
        const auto &layer = busy_[g.time_step];
        if (layer[g.a] || (g.b != kNoQudit && layer[g.b])) {
            throw std::invalid_argument("qudit used twice in time step " + std::to_string(g.time_step));
        }
    }
}

void Circuit::append(const Gate &g) {
    validate(g);
    while (busy_.size() <= g.time_step) {
        busy_.emplace_back(n_, false);
    }
    busy_[g.time_step][g.a] = true;
    next_free_[g.a] = std::max(next_free_[g.a], g.time_step + 1);
    if (g.b != kNoQudit) {
        busy_[g.time_step][g.b] = true;
        next_free_[g.b] = std::max(next_free_[g.b], g.time_step + 1);
    }
    gates_.push_back(g);
}

std::size_t Circuit::frontier(std::span<const std::size_t> qudits) const {
    std::size_t t = 0;
    for (auto q : qudits) {
        if (q >= n_) {
            throw std::out_of_range("qudit out of range");
        }
        t = std::max(t, next_free_[q]);
    }
    return t;
}

std::size_t Circuit::schedule(GateKind kind, std::size_t a, std::size_t b, elem_t r) {
    std::size_t qs[2] = {a, b};
    std::size_t t = frontier(std::span<const std::size_t>(qs, b == kNoQudit ? 1 : 2));
    append(Gate{kind, a, b, r, t});
    return t;
}

void Circuit::barrier(std::size_t step) {
    for (auto &t : next_free_) {
        t = std::max(t, step);
    }
}

std::size_t Circuit::add_block(Block b) {
    for (auto q : b.qudits) {
        if (q >= n_) {
            throw std::out_of_range("block qudit out of range");
        }
    }
    if (b.support.rows() > 0 && b.support.cols() != b.qudits.size()) {
        throw std::invalid_argument("block support has the wrong length");
    }
    blocks_.push_back(std::move(b));
    return blocks_.size() - 1;
}

std::vector<Gate> Circuit::ordered_gates() const {
    std::vector<Gate> out = gates_;
    std::stable_sort(out.begin(), out.end(), [](const Gate &x, const Gate &y) { return x.time_step < y.time_step; });
    return out;
}

void conjugate_frame(const Field &f, const Gate &g, std::span<elem_t> x, std::span<elem_t> z) {
    switch (g.kind) {
        case GateKind::fourier: {
            elem_t nx = f.neg(z[g.a]);
            z[g.a] = x[g.a];
            x[g.a] = nx;
            break;
        }
        case GateKind::fourier_inverse: {
            elem_t nz = f.neg(x[g.a]);
            x[g.a] = z[g.a];
            z[g.a] = nz;
            break;
        }
        case GateKind::multiply:
            x[g.a] = f.mul(g.r, x[g.a]);
            z[g.a] = f.mul(f.inv(g.r), z[g.a]);
            break;
        case GateKind::add:
            x[g.b] = f.add(x[g.b], x[g.a]);
            z[g.a] = f.sub(z[g.a], z[g.b]);
            break;
        case GateKind::prep_zero:
            x[g.a] = 0;
            z[g.a] = 0;
            break;
        case GateKind::measure_z:
            x[g.a] = 0;
            z[g.a] = 0;
            break;
    }
}

PauliOperator conjugate_through(const Gate &g, const PauliOperator &p) {
    if (g.kind == GateKind::prep_zero || g.kind == GateKind::measure_z) {
        throw std::invalid_argument("conjugate_through: gate is not unitary");
    }
    if (g.a >= p.n() || (g.b != kNoQudit && g.b >= p.n())) {
        throw std::out_of_range("conjugate_through: gate support outside the operator");
    }
    const Field &f = p.field();
    PauliOperator out = p;
    if (g.kind == GateKind::fourier || g.kind == GateKind::fourier_inverse) {
        // Both directions pick up omega^{-tr(x z)} when X is moved back left of Z.
        out.add_phase(f.p() - f.trace(f.mul(p.x()[g.a], p.z()[g.a])));
    }
    conjugate_frame(f, g, out.x(), out.z());
    return out;
}

CostCounts count_costs(const Circuit &c) {
    CostCounts out;
    std::set<std::size_t> steps;
    for (const auto &g : c.gates()) {
        steps.insert(g.time_step);
        switch (g.kind) {
            case GateKind::add:
                out.two_qudit_gates++;
                break;
            case GateKind::prep_zero:
                out.preparations++;
                break;
            case GateKind::measure_z:
                out.measurements++;
                break;
            default:
                out.single_qudit_gates++;
        }
    }
    out.time_steps = steps.size();
    return out;
}

std::string_view channel_name(FaultChannel c) {
    switch (c) {
        case FaultChannel::depolarizing:
            return "depolarizing";
        case FaultChannel::x_only:
            return "x";
        case FaultChannel::z_only:
            return "z";
    }
    return "?";
}

FaultChannel parse_channel(std::string_view s) {
    for (auto c : {FaultChannel::depolarizing, FaultChannel::x_only, FaultChannel::z_only}) {
        if (channel_name(c) == s) {
            return c;
        }
    }
    throw std::invalid_argument("unknown fault channel `" + std::string(s) + "`");
}

void NoiseModel::validate() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    }
}

std::string NoiseModel::str() const {
    std::ostringstream out;
    out << "eps=" << epsilon << " gates=" << after_gates << " prep=" << after_prep << " measure=" << before_measure
        << " idle=" << idle << " correlated_add=" << correlated_add << " channel=" << channel_name(channel);
    return out.str();
}

Schedule Schedule::build(const Circuit &c, const NoiseModel &noise) {
    noise.validate();
    Schedule s;
    s.field = c.field_ptr();
    s.n_qudits = c.n_qudits();
    s.gates = c.ordered_gates();

    std::vector<bool> retired(c.n_qudits(), false);
    std::vector<bool> seen(c.n_qudits(), false);
    std::vector<bool> live(c.n_qudits(), false);
    for (const auto &g : s.gates) {
        if (!seen[g.a]) {
            seen[g.a] = true;
            live[g.a] = g.kind != GateKind::prep_zero;
        }
        if (g.b != kNoQudit && !seen[g.b]) {
            seen[g.b] = true;
            live[g.b] = true;
        }
    }

    std::vector<bool> touched(c.n_qudits(), false);
    std::vector<FaultSite> sites;
    for (std::size_t i = 0; i < s.gates.size(); i++) {
        const Gate &g = s.gates[i];
        if (retired[g.a] || (g.b != kNoQudit && retired[g.b])) {
            throw std::logic_error("gate on a measured qudit");
        }
        touched[g.a] = true;
        if (g.b != kNoQudit) {
            touched[g.b] = true;
        }
        switch (g.kind) {
            case GateKind::prep_zero:
                live[g.a] = true;
                if (noise.after_prep) {
                    sites.push_back({i + 1, g.a});
                }
                break;
            case GateKind::measure_z:
                if (noise.before_measure) {
                    sites.push_back({i, g.a});
                }
                retired[g.a] = true;
                live[g.a] = false;
                break;
            case GateKind::add:
                if (noise.after_gates) {
                    if (noise.correlated_add) {
                        sites.push_back({i + 1, g.a, g.b});
                    } else {
                        sites.push_back({i + 1, g.a});
                        sites.push_back({i + 1, g.b});
                    }
                }
                break;
            default:
                if (noise.after_gates) {
                    sites.push_back({i + 1, g.a});
                }
        }
        bool layer_end = i + 1 == s.gates.size() || s.gates[i + 1].time_step != g.time_step;
        if (layer_end) {
            if (noise.idle) {
                for (std::size_t q = 0; q < c.n_qudits(); q++) {
                    if (live[q] && !touched[q]) {
                        sites.push_back({i + 1, q});
                    }
                }
            }
            std::fill(touched.begin(), touched.end(), false);
        }
    }
    std::stable_sort(sites.begin(), sites.end(),
                     [](const FaultSite &x, const FaultSite &y) { return x.before_gate < y.before_gate; });
    s.sites = std::move(sites);
    return s;
}

namespace {

std::uint64_t alphabet(const Field &f, FaultChannel ch) {
    return ch == FaultChannel::depolarizing ? std::uint64_t{f.q()} * f.q() : f.q();
}

void decode_symbol(const Field &f, FaultChannel ch, std::uint64_t v, elem_t &x, elem_t &z) {
    switch (ch) {
        case FaultChannel::depolarizing:
            x = static_cast<elem_t>(v / f.q());
            z = static_cast<elem_t>(v % f.q());
            break;
        case FaultChannel::x_only:
            x = static_cast<elem_t>(v);
            z = 0;
            break;
        case FaultChannel::z_only:
            x = 0;
            z = static_cast<elem_t>(v);
            break;
    }
}

}  // namespace

std::uint64_t Schedule::fault_choices(std::size_t site, const NoiseModel &noise) const {
    std::uint64_t a = alphabet(*field, noise.channel);
    return (sites[site].qudit2 == kNoQudit ? a : a * a) - 1;
}

Fault Schedule::fault_at(std::size_t site, std::uint64_t choice, const NoiseModel &noise) const {
    std::uint64_t a = alphabet(*field, noise.channel);
    std::uint64_t v = choice + 1;
    Fault f{site};
    if (sites[site].qudit2 == kNoQudit) {
        decode_symbol(*field, noise.channel, v, f.x, f.z);
    } else {
        decode_symbol(*field, noise.channel, v / a, f.x, f.z);
        decode_symbol(*field, noise.channel, v % a, f.x2, f.z2);
    }
    return f;
}

std::vector<Fault> sample_faults(const Schedule &s, const NoiseModel &noise, Rng &rng) {
    std::vector<Fault> out;
    if (noise.epsilon <= 0.0) {
        return out;
    }
    std::uint64_t i = rng.geometric(noise.epsilon);
    while (i < s.sites.size()) {
        out.push_back(s.fault_at(i, rng.below(s.fault_choices(i, noise)), noise));
        std::uint64_t skip = rng.geometric(noise.epsilon);
        if (skip >= s.sites.size()) {
            break;
        }
        i += skip + 1;
    }
    return out;
}

FrameState run_frame(const Circuit &c, const Schedule &s, std::span<const Fault> faults, Rng *ideal_rng,
                     const PauliOperator *initial) {
    const Field &f = *s.field;
    FrameState st{PauliOperator(s.field, s.n_qudits), Vec(s.n_qudits, 0), std::vector<bool>(s.n_qudits, false), {}};
    if (initial != nullptr) {
        if (initial->n() != s.n_qudits) {
            throw std::invalid_argument("initial frame has the wrong size");
        }
        st.frame = *initial;
        st.frame.set_phase(PhaseExponent(0, f.p()));
    }
    auto &x = st.frame.x();
    auto &z = st.frame.z();

    std::vector<const Fault *> order;
    order.reserve(faults.size());
    for (const auto &fl : faults) {
        if (fl.site >= s.sites.size()) {
            throw std::out_of_range("fault site out of range");
        }
        order.push_back(&fl);
    }
    std::stable_sort(order.begin(), order.end(), [&](const Fault *p, const Fault *q) {
        return s.sites[p->site].before_gate < s.sites[q->site].before_gate;
    });

    std::size_t next = 0;
    auto inject_until = [&](std::size_t gate_index) {
        while (next < order.size() && s.sites[order[next]->site].before_gate <= gate_index) {
            const Fault &fl = *order[next];
            const FaultSite &site = s.sites[fl.site];
            x[site.qudit] = f.add(x[site.qudit], fl.x);
            z[site.qudit] = f.add(z[site.qudit], fl.z);
            if (site.qudit2 != kNoQudit) {
                x[site.qudit2] = f.add(x[site.qudit2], fl.x2);
                z[site.qudit2] = f.add(z[site.qudit2], fl.z2);
            }
            next++;
        }
    };

    for (std::size_t i = 0; i < s.gates.size(); i++) {
        inject_until(i);
        const Gate &g = s.gates[i];
        if (g.kind == GateKind::measure_z) {
            st.measured[g.a] = x[g.a];
            st.retired[g.a] = true;
        }
        conjugate_frame(f, g, x, z);
    }
    inject_until(s.gates.size());

    simd::GfOps ops(f);
    for (const auto &b : c.blocks()) {
        Vec word(b.qudits.size(), 0);
        bool complete = true;
        for (std::size_t j = 0; j < b.qudits.size(); j++) {
            complete = complete && st.retired[b.qudits[j]];
            word[j] = st.measured[b.qudits[j]];
        }
        if (complete && ideal_rng != nullptr) {
            for (std::size_t r = 0; r < b.support.rows(); r++) {
                auto coeff = static_cast<elem_t>(ideal_rng->below(f.q()));
                simd::gf_axpy(ops, coeff, b.support.row(r), word);
            }
        }
        st.block_words.push_back(complete ? std::move(word) : Vec{});
    }
    return st;
}

FrameState run_frame(const Circuit &c, const NoiseModel &noise, std::uint64_t seed) {
    Schedule s = Schedule::build(c, noise);
    Rng rng(seed);
    auto faults = sample_faults(s, noise, rng);
    return run_frame(c, s, faults, &rng);
}

void write_circuit(std::ostream &out, const Circuit &c) {
    out << "# field: " << c.field().descriptor() << "\n";
    out << "# qudits: " << c.n_qudits() << "\n";
    for (const auto &b : c.blocks()) {
        out << "# block " << b.name << " " << (b.support_label.empty() ? "none" : b.support_label);
        for (auto q : b.qudits) {
            out << " q" << q;
        }
        out << "\n";
    }
    for (const auto &g : c.ordered_gates()) {
        out << "t=" << g.time_step << " " << gate_name(g.kind) << " q" << g.a;
        if (g.b != kNoQudit) {
            out << " q" << g.b;
        }
        if (g.kind == GateKind::multiply) {
            out << " r=" << g.r;
        }
        out << "\n";
    }
}

namespace {

std::size_t parse_qudit(const std::string &tok) {
    if (tok.size() < 2 || tok[0] != 'q') {
        throw std::invalid_argument("expected a qudit token like q3, got `" + tok + "`");
    }
    std::size_t pos = 0;
    unsigned long v = std::stoul(tok.substr(1), &pos);
    if (pos != tok.size() - 1) {
        throw std::invalid_argument("malformed qudit token `" + tok + "`");
    }
    return v;
}

}  // namespace

Circuit read_circuit(std::istream &in, const std::function<Matrix(const std::string &, std::size_t)> &resolve_support) {
    FieldPtr field;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<Block> blocks;
    std::vector<Gate> gates;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) {
            continue;
        }
        try {
            if (tok == "#") {
                std::string key;
                ls >> key;
                if (key == "field:") {
                    std::string desc;
                    ls >> desc;
                    field = Field::parse_descriptor(desc);
                } else if (key == "qudits:") {
                    ls >> n;
                    have_n = true;
                } else if (key == "block") {
                    Block b;
                    ls >> b.name >> b.support_label;
                    std::string q;
                    while (ls >> q) {
                        b.qudits.push_back(parse_qudit(q));
                    }
                    if (b.support_label == "none") {
                        b.support_label.clear();
                    }
                    blocks.push_back(std::move(b));
                }
                continue;
            }
            if (tok.rfind("t=", 0) != 0) {
                throw std::invalid_argument("expected `t=<step>`");
            }
            Gate g{GateKind::prep_zero, 0};
            g.time_step = std::stoul(tok.substr(2));
            std::string kind;
            ls >> kind;
            g.kind = parse_gate_name(kind);
            std::string q;
            if (!(ls >> q)) {
                throw std::invalid_argument("missing qudit");
            }
            g.a = parse_qudit(q);
            if (g.kind == GateKind::add) {
                if (!(ls >> q)) {
                    throw std::invalid_argument("ADD needs a target qudit");
                }
                g.b = parse_qudit(q);
            }
            if (g.kind == GateKind::multiply) {
                std::string r;
                ls >> r;
                if (r.rfind("r=", 0) != 0) {
                    throw std::invalid_argument("M needs r=<elem>");
                }
                g.r = static_cast<elem_t>(std::stoul(r.substr(2)));
            }
            std::string extra;
            if (ls >> extra) {
                throw std::invalid_argument("trailing token `" + extra + "`");
            }
            gates.push_back(g);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::out_of_range &e) {
            throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!field || !have_n) {
        throw std::invalid_argument("circuit file needs `# field:` and `# qudits:` headers");
    }
    Circuit c(field, n);
    for (auto &b : blocks) {
        if (!b.support_label.empty() && resolve_support) {
            b.support = resolve_support(b.support_label, b.qudits.size());
        }
        c.add_block(std::move(b));
    }
    for (const auto &g : gates) {
        c.append(g);
    }
    return c;
}

}  // namespace qcss
