// Copyright 2026 The propscpp Authors.
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

#ifndef PROPS_FEATURES_HPP_
#define PROPS_FEATURES_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace props {

// Flat key=value feature structure attached to graph nodes. Keys are
// restricted to a fixed inventory and each key to its value domain:
//
//   tense     past | present | future
//   negated   true | false
//   modal     auxiliary lemma (can, must, ...)
//   definite  definite | indefinite
//   passive   true | false
//   asserted  true | false
//
// An absent key means unknown / not applicable, never "false".
class FeatureMap {
 public:
  static bool valid_entry(std::string_view key, std::string_view value) {
    auto is_bool = [](std::string_view v) { return v == "true" || v == "false"; };
    if (key == "tense")
      return value == "past" || value == "present" || value == "future";
    if (key == "negated" || key == "passive" || key == "asserted")
      return is_bool(value);
    if (key == "modal") return !value.empty();
    if (key == "definite") return value == "definite" || value == "indefinite";
    return false;
  }

  void set(const std::string& key, const std::string& value) {
    if (!valid_entry(key, value))
      throw std::invalid_argument("invalid feature " + key + "=" + value);
    kv_[key] = value;
  }

  std::optional<std::string> get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    return it->second;
  }

  void erase(const std::string& key) { kv_.erase(key); }

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  bool flag(const std::string& key) const { return get(key) == "true"; }
  bool empty() const { return kv_.empty(); }
  std::size_t size() const { return kv_.size(); }

  auto begin() const { return kv_.begin(); }
  auto end() const { return kv_.end(); }

  friend bool operator==(const FeatureMap&, const FeatureMap&) = default;
  friend auto operator<=>(const FeatureMap& a, const FeatureMap& b) {
    return a.kv_ <=> b.kv_;
  }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace props

#endif  // PROPS_FEATURES_HPP_
