// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace tricoul {

inline constexpr const char* version = "1.0.0";

}  // namespace tricoul
