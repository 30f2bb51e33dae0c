// Copyright 2026 The k3count Authors
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

#include "k3count/published_counts.hpp"

#include <array>

namespace k3 {

namespace {

constexpr std::array<PublishedCount, 82> kPublished{{
    {1, 1, 1},
    {1, 2, 2},
    {1, 3, 3},
    {1, 4, 4},
    {1, 5, 5},
    {2, 5, 6},
    {1, 6, 6},
    {1, 7, 7},
    {2, 7, 7},
    {3, 7, 7},
    {1, 8, 8},
    {3, 8, 6},
    {1, 9, 9},
    {2, 9, 7},
    {4, 9, 8},
    {1, 10, 10},
    {3, 10, 9},
    {1, 21, 21},
    {2, 21, 13},
    {4, 21, 12},
    {5, 21, 13},
    {8, 21, 11},
    {10, 21, 14},
    {1, 32, 32},
    {3, 32, 16},
    {5, 32, 16},
    {7, 32, 14},
    {9, 32, 15},
    {11, 32, 16},
    {13, 32, 14},
    {15, 32, 13},
    {1, 93, 93},
    {2, 93, 49},
    {4, 93, 30},
    {5, 93, 28},
    {7, 93, 25},
    {8, 93, 25},
    {10, 93, 26},
    {11, 93, 24},
    {13, 93, 23},
    {14, 93, 24},
    {16, 93, 21},
    {17, 93, 23},
    {19, 93, 22},
    {20, 93, 22},
    {22, 93, 22},
    {23, 93, 31},
    {25, 93, 23},
    {26, 93, 24},
    {28, 93, 20},
    {29, 93, 25},
    {32, 93, 20},
    {34, 93, 24},
    {35, 93, 21},
    {37, 93, 26},
    {38, 93, 22},
    {40, 93, 23},
    {41, 93, 23},
    {43, 93, 26},
    {44, 93, 25},
    {46, 93, 50},
    {92, 811, 48},
    {93, 811, 47},
    {94, 811, 46},
    {95, 811, 43},
    {96, 811, 45},
    {97, 811, 50},
    {98, 811, 48},
    {99, 811, 46},
    {100, 811, 53},
    {266, 811, 50},
    {267, 811, 51},
    {268, 811, 58},
    {269, 811, 83},
    {270, 811, 276},
    {271, 811, 146},
    {272, 811, 72},
    {273, 811, 60},
    {274, 811, 60},
    {275, 811, 47},
    {276, 811, 46},
    {277, 811, 45},
}};

}  // namespace

std::span<const PublishedCount> published_counts() { return kPublished; }

}  // namespace k3
