#pragma once

#include <stdexcept>
#include <string>

namespace o1o {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// core / config
struct MissingAssignment : Error { using Error::Error; };
struct EmptyClassSet : Error { using Error::Error; };
struct UnknownClassId : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// scoring / matching / training
struct DimensionMismatch : Error { using Error::Error; };
struct EmptyCalibrationSet : Error { using Error::Error; };
struct NonFiniteCost : Error { using Error::Error; };
struct InvalidNoiseParameters : Error { using Error::Error; };
struct InconsistentMatch : Error { using Error::Error; };
struct DegenerateBatch : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };

// evaluation / ingestion
struct DuplicateImageId : Error { using Error::Error; };
struct UnknownClassInPredictions : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct MissingSupercategory : Error { using Error::Error; };

}  // namespace o1o
