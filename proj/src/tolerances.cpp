// Copyright 2026 The povm-order Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povm/tolerances.hpp"

#include "povm/errors.hpp"

namespace povm {

namespace {
Tolerances g_active;  // set once at startup, read-only afterwards
}

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.herm *= factor;
  t.psd *= factor;
  t.trace *= factor;
  t.sum *= factor;
  t.prob *= factor;
  t.eig *= factor;
  t.lp *= factor;
  t.ker *= factor;
  t.state *= factor;
  return t;
}

const Tolerances& tols() { return g_active; }

void set_tolerance_profile(ToleranceProfile profile) {
  switch (profile) {
    case ToleranceProfile::Default:
      g_active = Tolerances{};
      break;
    case ToleranceProfile::Strict:
      g_active = Tolerances{}.scaled(0.1);
      break;
    case ToleranceProfile::Loose:
      g_active = Tolerances{}.scaled(10.0);
      break;
  }
}

ToleranceProfile parse_tolerance_profile(const std::string& name) {
  if (name == "default") return ToleranceProfile::Default;
  if (name == "strict") return ToleranceProfile::Strict;
  if (name == "loose") return ToleranceProfile::Loose;
  throw FormatError("unknown tolerance profile '" + name + "' (default|strict|loose)");
}

}  // namespace povm
