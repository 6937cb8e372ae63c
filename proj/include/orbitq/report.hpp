#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace orbitq {

enum class Format { Markdown, Csv, Json };
Format parse_format(std::string_view text);

/// One (type, q) line of a verification run.
struct Record
{
	std::string type;   // "E8", "C3"
	std::string family; // "SP(6)" for classical types, empty otherwise
	int q = 0;
	std::string case_tag;
	std::string orbit;
	int dim_orbit = 0;
	int integral_count = 0;
	int var_dim_joseph = 0;
	std::map<std::string, bool> checks;

	bool identity_holds() const { return var_dim_joseph == dim_orbit; }
	bool passed() const;
	friend bool operator==(Record const &, Record const &) = default;
};

struct VerificationReport
{
	std::vector<Record> records;

	int passed_count() const;
	int failed_count() const;
	bool all_passed() const { return failed_count() == 0; }
	friend bool operator==(VerificationReport const &, VerificationReport const &) = default;
};

std::string to_json(VerificationReport const &r);
/// Inverse of to_json; the summary block is checked against the records.
VerificationReport report_from_json(std::string_view text);
std::string to_csv(VerificationReport const &r);
std::string to_markdown(VerificationReport const &r);
std::string emit(VerificationReport const &r, Format f);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

} // namespace orbitq
