#pragma once

#include <filesystem>
#include <string>

#include "leaderline/model.hpp"

namespace leaderline {

// JSON instance documents. Numbers are strings holding an integer, a
// decimal ("1.5") or a fraction ("3/2"); plain JSON integers are accepted
// too. Syntax errors name the line and column, schema errors the JSON path.
// The result is validated and its constraints normalized.
Instance parse_instance(const std::string& text);
Instance read_instance(const std::filesystem::path& path);
std::string instance_to_json(const Instance& instance);
void write_instance(const std::filesystem::path& path, const Instance& instance);

// {"placements": [{"site", "side", "y", "candidate"?}, ...]}; an optional
// "objective" member is written for reference and ignored when read.
Labeling parse_labeling(const std::string& text, int site_count);
Labeling read_labeling(const std::filesystem::path& path, int site_count);
std::string labeling_to_json(const Labeling& labeling, const Rational* objective = nullptr);
void write_labeling(const std::filesystem::path& path, const Labeling& labeling, const Rational* objective = nullptr);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace leaderline
