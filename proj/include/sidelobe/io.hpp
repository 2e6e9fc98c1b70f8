#pragma once

#include <filesystem>
#include <string>

#include "sidelobe/design_run.hpp"
#include "sidelobe/metrics.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/spectral_mask.hpp"
#include "sidelobe/transform.hpp"

namespace sidelobe::io {

// Sequence files: JSON {"n": N, "phases": [...]} or plain text with one
// phase per line. The reader picks the format from the file extension
// (.json vs anything else).
void write_sequence_json(const UnimodularSequence& x,
                         const std::filesystem::path& path);
void write_sequence_text(const UnimodularSequence& x,
                         const std::filesystem::path& path);
UnimodularSequence read_sequence(const std::filesystem::path& path);

// Mask files: JSON {"lambda": l, "bands": [[lo, hi], ...]} with radians,
// or {"lambda": l, "indices": [k, ...]} with explicit bins.
SpectralMask read_mask(const std::filesystem::path& path, std::size_t n);

// Trace CSV: (iteration, objective) plus per-variant extras
// (alpha, halvings) / (ladder_index, cap) / (can_objective).
void write_trace_csv(const RunResult& result, Variant variant,
                     const std::filesystem::path& path);

// Correlation-level CSV: (lag, value_db), "-inf" literal for exact zeros.
void write_correlation_csv(const UnimodularSequence& x, Mode mode,
                           const std::filesystem::path& path);

// Spectrum CSV: (bin, power) on the aperiodic 2N grid.
void write_spectrum_csv(const UnimodularSequence& x,
                        const std::filesystem::path& path);

std::string format_db(double value);  // "-inf" for -infinity

}  // namespace sidelobe::io
