// Copyright 2026 The quasik Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace quasik {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QUASIK_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// lattice
QUASIK_DEFINE_ERROR(RankError);
QUASIK_DEFINE_ERROR(NotPrimitive);
QUASIK_DEFINE_ERROR(NotUnimodular);
QUASIK_DEFINE_ERROR(NotSaturated);
QUASIK_DEFINE_ERROR(DimensionMismatch);

// laurent
QUASIK_DEFINE_ERROR(ProfileMismatch);
QUASIK_DEFINE_ERROR(ZeroCharacter);
QUASIK_DEFINE_ERROR(NotDivisible);

// polytope
QUASIK_DEFINE_ERROR(NotAFace);
QUASIK_DEFINE_ERROR(NonGenericHeight);
QUASIK_DEFINE_ERROR(InvalidOrder);
QUASIK_DEFINE_ERROR(TooManyFacets);

// facering
QUASIK_DEFINE_ERROR(NotInW);
QUASIK_DEFINE_ERROR(ResidualNonzero);
QUASIK_DEFINE_ERROR(CertificateFailure);
QUASIK_DEFINE_ERROR(TruncationUnstable);

// io
QUASIK_DEFINE_ERROR(InputError);

#undef QUASIK_DEFINE_ERROR

}  // namespace quasik
