// Copyright 2026 The gf2cube Authors
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

#ifndef GF2CUBE_GF2CUBE_H_
#define GF2CUBE_GF2CUBE_H_

#include "gf2cube/coeffs.h"
#include "gf2cube/cubic.h"
#include "gf2cube/error.h"
#include "gf2cube/field.h"
#include "gf2cube/format.h"
#include "gf2cube/image.h"
#include "gf2cube/oracle.h"
#include "gf2cube/partition.h"
#include "gf2cube/poly.h"
#include "gf2cube/quad_ext.h"
#include "gf2cube/verify.h"

#endif  // GF2CUBE_GF2CUBE_H_
