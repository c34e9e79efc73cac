#pragma once

#include <filesystem>
#include <stdexcept>

#include "entp/transformer/model.hpp"

namespace entp::tf {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary layout, all little-endian: "ENTPCKPT", u32 version, the model
// config as u64 fields, u32 parameter count, then per parameter its name
// (u32 length + bytes), u32 rank, u64 dims and float32 values.
void save_checkpoint(const std::filesystem::path& path, const Model<float>& model);
Model<float> load_checkpoint(const std::filesystem::path& path);
ModelConfig read_checkpoint_config(const std::filesystem::path& path);

}  // namespace entp::tf
