/*
   Copyright 2026 The oddball authors

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

#ifndef ODDBALL_ODDBALL_HPP
#define ODDBALL_ODDBALL_HPP

#include "oddball/analytic.hpp"
#include "oddball/bessel.hpp"
#include "oddball/errors.hpp"
#include "oddball/exactalg.hpp"
#include "oddball/hankel.hpp"
#include "oddball/real.hpp"
#include "oddball/schroeder.hpp"
#include "oddball/weights.hpp"

#endif // ODDBALL_ODDBALL_HPP
