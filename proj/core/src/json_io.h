// Copyright 2026 The Sentisead Authors.
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


#ifndef SENTISEAD_SRC_JSON_IO_H_
#define SENTISEAD_SRC_JSON_IO_H_

#include <memory>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sentisead/detectors.h"
#include "sentisead/learner.h"
#include "sentisead/textprep.h"
#include "sentisead/vocabulary.h"

namespace sentisead::json_io {

using nlohmann::json;

json config_to_json(const learner::LearnerConfig& cfg);
learner::LearnerConfig config_from_json(const json& j);

json model_to_json(const learner::TrainedModel& m);
learner::TrainedModel model_from_json(const json& j);

json vocabulary_to_json(const Vocabulary& v);
Vocabulary vocabulary_from_json(const json& j);

json resources_to_json(const TextResources& r);
TextResources resources_from_json(const json& j);

// Rule-based detectors only.
json detector_to_json(const Detector& d);
std::shared_ptr<const Detector> detector_from_json(const json& j);

json parse_document(std::string_view text, std::string_view source);

}  // namespace sentisead::json_io

#endif  // SENTISEAD_SRC_JSON_IO_H_
