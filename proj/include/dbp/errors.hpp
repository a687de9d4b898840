#pragma once

#include <stdexcept>
#include <string>

namespace dbp {

// Base class for all errors raised by the library. Subclasses carry the
// contract name of the failure so callers can map them to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define DBP_DEFINE_ERROR(NAME)                                          \
    class NAME : public Error {                                         \
    public:                                                             \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

// structure_io
DBP_DEFINE_ERROR(ParseError);
DBP_DEFINE_ERROR(ChainNotFound);
DBP_DEFINE_ERROR(ManifestError);
DBP_DEFINE_ERROR(IdError);
DBP_DEFINE_ERROR(FetchError);

// electrostatics
DBP_DEFINE_ERROR(ChargeTableMiss);
DBP_DEFINE_ERROR(TableError);
DBP_DEFINE_ERROR(GridTooSmall);
DBP_DEFINE_ERROR(NonFiniteDivergence);
DBP_DEFINE_ERROR(OutOfGrid);
DBP_DEFINE_ERROR(SingularPoint);

// surface
DBP_DEFINE_ERROR(ReferenceMiss);

// features
DBP_DEFINE_ERROR(EmptyProtein);
DBP_DEFINE_ERROR(KeyMismatch);
DBP_DEFINE_ERROR(SchemaError);
DBP_DEFINE_ERROR(InsufficientData);

// learners
DBP_DEFINE_ERROR(DimensionError);
DBP_DEFINE_ERROR(SingleClassError);
DBP_DEFINE_ERROR(ModelFormatError);

// evaluation
DBP_DEFINE_ERROR(EmptyEvaluation);
DBP_DEFINE_ERROR(EvaluationImpossible);

// cli / io
DBP_DEFINE_ERROR(IoError);
DBP_DEFINE_ERROR(ConfigError);

#undef DBP_DEFINE_ERROR

} // namespace dbp
