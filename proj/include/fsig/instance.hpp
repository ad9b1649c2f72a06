/*
   Copyright 2026 The fsig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FSIG_INSTANCE_HPP
#define FSIG_INSTANCE_HPP

#include "fsig/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fsig {

/// Task block of an instance file.  Unknown kinds and parameter keys
/// are rejected at parse time.
struct TaskSpec {
    std::string kind;   // hk | srel | srat | gamma | verify | oracle-diff
    std::string ideal;  // name of the referenced ideal
    std::optional<unsigned> e_max;
    std::optional<unsigned> e;
    std::vector<unsigned> levels;
    std::vector<std::string> gamma;
    std::optional<std::string> order;
    std::optional<int> dim;
    std::optional<std::uint64_t> budget;
    std::optional<bool> rank1;
    std::vector<std::string> sample;  // raw coefficient expressions

    bool operator==(const TaskSpec& o) const;
};

/// Parsed instance: coefficient field, ambient ring, defining ideal,
/// named ideals and the single task.
struct InstanceFile {
    FieldSpec::Ptr field;
    Ring::Ptr ring;
    std::vector<Polynomial> defining;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
    TaskSpec task;

    const std::vector<Polynomial>& ideal_by_name(const std::string& name) const;
    /// Canonical printed form; parse(to_text()) reproduces the instance.
    std::string to_text() const;
    bool operator==(const InstanceFile& o) const;
};

InstanceFile parse_instance(const std::string& text);

/// Expression parser for a single polynomial over a ring (used by the
/// instance parser and by tests).  Identifiers resolve to ring
/// variables first, then to field symbols.
Polynomial parse_polynomial(const std::string& text, const Ring::Ptr& ring);

}  // namespace fsig

#endif
