/*
   Copyright 2026 The ratgf Authors

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

#ifndef RATGF_ERRORS_HPP
#define RATGF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratgf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RATGF_DEFINE_ERROR(Name)                   \
    class Name : public Error {                    \
    public:                                        \
        explicit Name(const std::string& what_arg) \
            : Error(#Name ": " + what_arg) {}      \
    }

// exact-core
RATGF_DEFINE_ERROR(InexactDivision);
RATGF_DEFINE_ERROR(ZeroDenominator);
RATGF_DEFINE_ERROR(ShapeError);

// cfinite
RATGF_DEFINE_ERROR(DataTooShort);
RATGF_DEFINE_ERROR(InternalInconsistency);

// graphs / spanning-gf
RATGF_DEFINE_ERROR(BadVertexPair);
RATGF_DEFINE_ERROR(StructureConjectureViolated);
RATGF_DEFINE_ERROR(NotConnected);

// toeplitz
RATGF_DEFINE_ERROR(InconsistentSpec);
RATGF_DEFINE_ERROR(BudgetExceeded);
RATGF_DEFINE_ERROR(BadState);
RATGF_DEFINE_ERROR(SchemeExplosion);
RATGF_DEFINE_ERROR(SingularTransferSystem);
RATGF_DEFINE_ERROR(NoFit);

#undef RATGF_DEFINE_ERROR

}  // namespace ratgf

#endif  // RATGF_ERRORS_HPP
