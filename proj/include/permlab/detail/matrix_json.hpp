// Copyright 2026 The Permlab Authors
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

#ifndef PERMLAB_DETAIL_MATRIX_JSON_HPP
#define PERMLAB_DETAIL_MATRIX_JSON_HPP

#include <json.hpp>

#include "permlab/matrix.hpp"

namespace permlab::detail {

// Shared between the matrix codecs and the interferometer file format.
nlohmann::json matrix_to_json(const SquareMatrix& a);
SquareMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace permlab::detail

#endif  // PERMLAB_DETAIL_MATRIX_JSON_HPP
