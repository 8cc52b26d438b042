// Copyright 2026 The pbsgate Authors
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

#ifndef PBSGATE_PARSER_H
#define PBSGATE_PARSER_H

#include <string>
#include <string_view>

#include "pbsgate/circuit.h"

namespace pbsgate {

/// Parses the line-oriented circuit format.
///
///     mode <id>...
///     input qubit <mode> <re_aH> <im_aH> <re_aV> <im_aV>
///     input twoqubit <m1> <m2> <re im> x4          (HH, HV, VH, VV)
///     input bell <m1> <m2>
///     input chi <m1> <m2> <m3> <m4>
///     input term <re> <im> <mode>:<H|V>[:<count>]...
///     pbs <hv|fs> <in1> <in2> <out1> <out2>
///     rotate <mode> <degrees>
///     polphase <mode> <H|V> <degrees>
///     detect <hv|fs> <mode> as <label>
///     accept <label> <pol>...
///     on <label> <pol> do <correction>...
///     output <mode>...
///
/// `#` starts a comment; LF and CRLF line endings are accepted. All
/// `input term` lines together form a single custom preparation. Throws
/// CircuitError with a 1-based line and column.
CircuitSpec parse_circuit(std::string_view text);
CircuitSpec parse_circuit(std::string_view text, SourceMap &where);

/// Canonical text form; parse_circuit(print_circuit(s)) == s.
std::string print_circuit(const CircuitSpec &spec);

}  // namespace pbsgate

#endif
