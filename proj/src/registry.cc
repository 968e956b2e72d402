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

#include "qcss/registry.h"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace qcss {

namespace {

std::string_view strip_suffix(std::string_view s) {
    for (std::string_view suffix : {"-classical", "-css"}) {
        if (s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
            return s.substr(0, s.size() - suffix.size());
        }
    }
    return s;
}

const std::regex &family_pattern() {
    static const std::regex re(R"((hamming|simplex)-q(\d+)-m(\d+))");
    return re;
}

}  // namespace

bool is_builtin_name(std::string_view selector) {
    std::string base(strip_suffix(selector));
    return base == "steane" || base == "golay23" || base == "golay11t" || std::regex_match(base, family_pattern());
}

LinearCode resolve_code(std::string_view selector) {
    std::string base(strip_suffix(selector));
    if (base == "steane") {
        LinearCode c = hamming(2, 3);
        return LinearCode(c.field_ptr(), c.generator(), c.parity_check(), "steane", 3);
    }
    if (base == "golay23") {
        return golay23();
    }
    if (base == "golay11t") {
        return golay11_ternary();
    }
    std::smatch m;
    if (std::regex_match(base, m, family_pattern())) {
        auto q = static_cast<std::uint32_t>(std::stoul(m[2]));
        auto mm = static_cast<std::uint32_t>(std::stoul(m[3]));
        return m[1] == "hamming" ? hamming(q, mm) : simplex(q, mm);
    }
    std::ifstream in{std::string(selector)};
    if (!in) {
        throw std::invalid_argument("unknown code `" + std::string(selector) +
                                    "`: not a builtin (steane, golay23, golay11t, hamming-q<q>-m<m>, "
                                    "simplex-q<q>-m<m>) and not a readable file");
    }
    return read_code(in, std::string(selector));
}

std::vector<std::string> builtin_catalogue() {
    return {"steane",          "golay23",         "golay11t",        "hamming-q2-m2",   "hamming-q2-m4",
            "hamming-q2-m5",   "hamming-q3-m2",   "hamming-q3-m3",   "hamming-q4-m2",   "hamming-q4-m3",
            "hamming-q5-m2",   "simplex-q2-m2",   "simplex-q2-m3",   "simplex-q2-m4",   "simplex-q3-m2",
            "simplex-q3-m3",   "simplex-q4-m2"};
}

std::vector<std::string> builtin_css_catalogue() {
    std::vector<std::string> out;
    for (const auto &name : builtin_catalogue()) {
        LinearCode c = resolve_code(name);
        if (2 * c.k() > c.n() && contains_dual(c)) {
            out.push_back(name);
        }
    }
    return out;
}

}  // namespace qcss
