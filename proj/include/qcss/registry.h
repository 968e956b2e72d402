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

#ifndef QCSS_REGISTRY_H
#define QCSS_REGISTRY_H

#include <string>
#include <string_view>
#include <vector>

#include "qcss/codes.h"

namespace qcss {

/// Resolves a code selector to its classical code C.
///
/// Builtins: steane, golay23, golay11t, hamming-q<q>-m<m>, simplex-q<q>-m<m>,
/// each optionally suffixed with -classical or -css (both name the same C; the
/// suffix only documents intent). Anything else is read as a code file.
/// Throws std::invalid_argument for unknown names or malformed files.
LinearCode resolve_code(std::string_view selector);

bool is_builtin_name(std::string_view selector);

/// The fixed catalogue used for classification and cost tables.
std::vector<std::string> builtin_catalogue();
/// Catalogue entries that yield a CSS code: C^perp <= C and K = 2k - n >= 1.
std::vector<std::string> builtin_css_catalogue();

}  // namespace qcss

#endif
