// Copyright 2026 The wvprivacy Authors
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

#ifndef WVP_GAME_NORMAL_H_
#define WVP_GAME_NORMAL_H_

namespace wvp {

double NormalPdf(double x);
double NormalCdf(double x);

// Inverse of NormalCdf on (0, 1). Throws std::invalid_argument otherwise.
double NormalQuantile(double p);

}  // namespace wvp

#endif  // WVP_GAME_NORMAL_H_
