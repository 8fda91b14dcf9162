// Copyright 2026 The maxstable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/stream_reader.h"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace maxstable::cli {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

double checked_value(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("value is not finite");
  if (v < 0.0) throw std::invalid_argument("value is negative");
  return v == 0.0 ? 0.0 : v;  // drop the sign of -0
}

}  // namespace

StreamItem parse_text_record(std::string_view line) {
  const auto sep = line.find_first_of("\t,");
  if (sep == std::string_view::npos) {
    throw std::invalid_argument("expected \"index<TAB or ,>value\"");
  }
  const auto index_text = trim(line.substr(0, sep));
  const auto value_text = trim(line.substr(sep + 1));

  StreamItem item;
  {
    const auto* end = index_text.data() + index_text.size();
    auto [p, ec] = std::from_chars(index_text.data(), end, item.index);
    if (ec != std::errc() || p != end || index_text.empty()) {
      throw std::invalid_argument("index is not an unsigned 64-bit integer");
    }
  }
  {
    const auto* end = value_text.data() + value_text.size();
    double v = 0.0;
    auto [p, ec] = std::from_chars(value_text.data(), end, v);
    if (ec != std::errc() || p != end || value_text.empty()) {
      throw std::invalid_argument("value is not a decimal number");
    }
    item.value = checked_value(v);
  }
  return item;
}

StreamItem parse_json_record(std::string_view line) {
  const auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON");
  if (!doc.is_object()) throw std::invalid_argument("expected a JSON object");
  const auto i = doc.find("i");
  const auto v = doc.find("v");
  if (i == doc.end() || v == doc.end()) {
    throw std::invalid_argument("expected keys \"i\" and \"v\"");
  }
  StreamItem item;
  if (i->is_number_unsigned()) {
    item.index = i->get<std::uint64_t>();
  } else if (i->is_number_integer() && i->get<std::int64_t>() >= 0) {
    item.index = static_cast<std::uint64_t>(i->get<std::int64_t>());
  } else {
    throw std::invalid_argument("\"i\" is not an unsigned 64-bit integer");
  }
  if (!v->is_number()) throw std::invalid_argument("\"v\" is not a number");
  item.value = checked_value(v->get<double>());
  return item;
}

std::optional<StreamItem> StreamReader::next() {
  while (std::getline(in_, line_)) {
    ++line_number_;
    const auto body = trim(line_);
    if (body.empty()) continue;
    if (format_ == StreamFormat::kUnknown) {
      format_ = body.front() == '{' ? StreamFormat::kJsonLines
                                    : StreamFormat::kText;
    }
    try {
      if (format_ == StreamFormat::kJsonLines) return parse_json_record(body);
      if (body.front() == '#') continue;
      return parse_text_record(body);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_number_, e.what());
    }
  }
  if (in_.bad()) throw ParseError(line_number_, "read error");
  return std::nullopt;
}

}  // namespace maxstable::cli
