#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "caf/codec.hpp"
#include "caf/image.hpp"
#include "caf/net.hpp"
#include "caf/optim.hpp"

namespace caf {

// --- dataset directory: manifest.tsv + img/<index>.pgm (binary P5) --------

// Writes one line per sample "<zero-padded index>\t<label>" plus one PGM per
// sample. Index width is the digit count of n-1, uniform per dataset.
void save_dataset(const std::vector<LabeledSample>& samples, const std::filesystem::path& dir);

// Round-trips pixels and labels exactly. When `alpha` is given every label
// character is validated against it. Errors name the offending file.
std::vector<LabeledSample> load_dataset(const std::filesystem::path& dir,
                                        const Alphabet* alpha = nullptr);

void write_pgm(const GrayImage& img, const std::filesystem::path& path);
GrayImage read_pgm(const std::filesystem::path& path);

// --- checkpoint: single binary file, little-endian, FNV-1a digest ---------

inline constexpr uint32_t kCheckpointVersion = 1;

struct CheckpointData {
    NetConfig net;
    OptimConfig optim;
    std::string alphabet;
    TrainState state;  // params, velocity, t; state.rs is the caller's to set
};

void save_checkpoint(const TrainState& state, const NetConfig& net, const OptimConfig& optim,
                     const std::string& alphabet, const std::filesystem::path& path);

// Throws FormatError on a bad magic, VersionError on a version mismatch and
// CorruptionError on truncation or digest mismatch.
CheckpointData load_checkpoint(const std::filesystem::path& path);

// --- metrics CSV -----------------------------------------------------------

struct MetricsRow {
    int run = 0;
    int round = 0;
    int64_t iter = 0;
    double lr = 0.0;
    double loss = 0.0;
    double seq_acc = 0.0;
    double char_acc = 0.0;
    int64_t train_size = 0;
    double mean_eta = 0.0;
};

// Header "run,round,iter,lr,loss,seq_acc,char_acc,train_size,mean_eta",
// rows sorted by (run, round, iter), floats with 6 significant digits.
void write_metrics(std::vector<MetricsRow> rows, const std::filesystem::path& path);

}  // namespace caf
