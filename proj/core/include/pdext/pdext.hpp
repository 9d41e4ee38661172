// Copyright 2026 The pdext Authors
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

#ifndef PDEXT_PDEXT_HPP_
#define PDEXT_PDEXT_HPP_

#include "pdext/bochner.hpp"
#include "pdext/errors.hpp"
#include "pdext/gp.hpp"
#include "pdext/interval.hpp"
#include "pdext/kernel.hpp"
#include "pdext/mercer.hpp"
#include "pdext/pd_function.hpp"
#include "pdext/pdcheck.hpp"
#include "pdext/polya.hpp"
#include "pdext/rkhs.hpp"
#include "pdext/serialize.hpp"
#include "pdext/spectral_measure.hpp"

#endif  // PDEXT_PDEXT_HPP_
