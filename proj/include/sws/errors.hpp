#pragma once

#include <stdexcept>
#include <string>

namespace sws {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { using Error::Error; };
class NoPath : public Error { using Error::Error; };
class UnknownVertex : public Error { using Error::Error; };
class UnknownEdge : public Error { using Error::Error; };
class InconsistentKnowledge : public Error { using Error::Error; };
class EmptyCandidates : public Error { using Error::Error; };
class InvalidQuery : public Error { using Error::Error; };
class TooManyEdges : public Error { using Error::Error; };
class PolicyChoseKnownDown : public Error { using Error::Error; };
class GeneratorExhausted : public Error { using Error::Error; };
class InvalidInstance : public Error { using Error::Error; };

}  // namespace sws
