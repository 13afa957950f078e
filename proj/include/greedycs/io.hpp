// Copyright 2026-present the greedy-cs project
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

#pragma once

#include <string>
#include <vector>

#include "greedycs/dense.hpp"

// File formats. Matrices: plain text, one row per line, comma-separated
// decimal literals, '#' comment lines allowed, constant column count.
// Vectors: one value per line or a single comma-separated line. Doubles are
// printed in the shortest form that round-trips exactly, so write -> read is
// the identity.

namespace greedycs::io {

/// Shortest decimal form of x that parses back to the same bits.
std::string format_double(double x);

/// Strict double parse of an entire token; throws ParseError-style content
/// via the callers (returns false on failure).
bool parse_double(const std::string& token, double& out);

DenseMatrix read_matrix(const std::string& path);
DenseMatrix parse_matrix(const std::string& text);
void write_matrix(const std::string& path, const DenseMatrix& m);
std::string matrix_to_string(const DenseMatrix& m);

std::vector<double> read_vector(const std::string& path);
std::vector<double> parse_vector(const std::string& text);
void write_vector(const std::string& path, const std::vector<double>& v);

/// RFC-4180 quoting: wraps the field in quotes when it contains a comma,
/// quote, or newline, doubling embedded quotes.
std::string csv_quote(const std::string& field);
std::vector<std::string> csv_split_line(const std::string& line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace greedycs::io
