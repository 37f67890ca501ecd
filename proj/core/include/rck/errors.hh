/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_ERRORS_HH
#define RCK_GUARD_CORE_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace rck
{
    /// A caller handed us something outside an operation's stated domain.
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An input exceeds a fixed size or computation budget (vertex cap etc).
    class SizeError : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };

    /// Malformed textual input: graph6 lines, colour words, construction names.
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif
