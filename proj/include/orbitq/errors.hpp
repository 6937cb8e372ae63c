#pragma once

#include <stdexcept>
#include <string>

namespace orbitq {

/// Caller supplied something outside an operation's domain.
struct InvalidInput : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

/// Very even SO partitions label two orbits and are never used here.
struct VeryEvenPartition : InvalidInput
{
	using InvalidInput::InvalidInput;
};

/// Two independent computations disagreed, or a case table did not select
/// exactly one entry. Always a bug in a formula or a transcribed table.
struct ConsistencyError : std::logic_error
{
	using std::logic_error::logic_error;
};

} // namespace orbitq
