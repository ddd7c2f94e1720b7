#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace shoms {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PackingFailure : public Error {
public:
    using Error::Error;
};

class NonIntegerTiling : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class SingularElement : public Error {
public:
    SingularElement(std::size_t element, double area);
    std::size_t element;
    double area;
};

class NoConvergence : public Error {
public:
    NoConvergence(int max_iter, double residual);
    int max_iter;
    double residual;
};

class GridTooCoarse : public Error {
public:
    using Error::Error;
};

class CacheCorrupt : public Error {
public:
    using Error::Error;
};

class EmptySampleSet : public Error {
public:
    using Error::Error;
};

/// Picard loop failed; the last two iterates are kept for diagnosis.
class PicardNoConvergence : public Error {
public:
    PicardNoConvergence(int max_iter, double last_change, std::vector<double> previous,
                        std::vector<double> last);
    int max_iter;
    double last_change;
    std::vector<double> previous_iterate;
    std::vector<double> last_iterate;
};

class MissingTable : public Error {
public:
    using Error::Error;
};

class ZeroReference : public Error {
public:
    using Error::Error;
};

class ConfigInvalid : public Error {
public:
    ConfigInvalid(std::string field_path, const std::string& what);
    std::string field_path;
};

class StageInputMissing : public Error {
public:
    using Error::Error;
};

} // namespace shoms
