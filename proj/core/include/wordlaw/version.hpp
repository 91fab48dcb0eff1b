// Copyright 2026 The wordlaw Authors.
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

#ifndef WORDLAW_VERSION_HPP_
#define WORDLAW_VERSION_HPP_

namespace wordlaw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wordlaw

#endif  // WORDLAW_VERSION_HPP_
