/*
   Copyright 2026 The x13verify Authors

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

#ifndef X13_X13_HPP
#define X13_X13_HPP

#include "x13/rational.hpp"
#include "x13/polynomial.hpp"
#include "x13/qpoly.hpp"
#include "x13/finite_field.hpp"
#include "x13/number_field.hpp"
#include "x13/elliptic.hpp"
#include "x13/hyperelliptic.hpp"
#include "x13/modular_x13.hpp"
#include "x13/family.hpp"
#include "x13/sporadic.hpp"
#include "x13/report.hpp"
#include "x13/checks.hpp"

#endif  // X13_X13_HPP
