#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gfnoma/cnn.hpp"
#include "gfnoma/simulator.hpp"

namespace gfnoma {

uint64_t fnv1a64(std::string_view data);

// Binary sample container ("GFND"): little-endian header
// (magic u32, version u32, antennas/devices/symbols i32, seed u64,
// config_hash u64, sample count u64) followed per sample by the decorrelated
// tensor as complex64 (float32 re/im pairs, antenna-major), K label bytes and
// the realized activity rate as float32.
void write_dataset(const std::string& path, const Dataset& dataset);
Dataset read_dataset(const std::string& path);

// Header probe without loading the payload; used for shard resume.
struct DatasetHeader {
  int antennas = 0;
  int device_count = 0;
  int symbols_per_packet = 0;
  uint64_t seed = 0;
  uint64_t config_hash = 0;
  uint64_t sample_count = 0;
};
bool try_read_dataset_header(const std::string& path, DatasetHeader& header);

// Frame container ("GFNF"): header (magic, version, K/Nc/M/Ns i32, seed u64,
// config_hash u64, frame count u64, noise_var f64); per frame the activity
// bytes, realized rate f32, symbol matrix f32 row-major, channel gains and
// received matrices as complex64.
void write_frames(const std::string& path, const std::vector<PacketFrame>& frames,
                  int spreading_factor, uint64_t seed, uint64_t config_hash);
std::vector<PacketFrame> read_frames(const std::string& path);

// Small-case debug dump: one row per received chip with frame/antenna
// indices, plus activity rows.
void write_frames_csv(const std::string& path, const std::vector<PacketFrame>& frames);

}  // namespace gfnoma
