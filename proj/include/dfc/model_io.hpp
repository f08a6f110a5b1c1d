#pragma once

#include <filesystem>

#include "dfc/morphable_model.hpp"

namespace dfc {

/// Binary model container, magic "DCMM". A JSON mirror of the same schema is
/// accepted on load (detected by content) for hand-authored fixtures.
void save_model(const MorphableModel& model, const std::filesystem::path& path);
MorphableModel load_model(const std::filesystem::path& path);

void save_model_json(const MorphableModel& model, const std::filesystem::path& path);

} // namespace dfc
