#include "orbitq/report.hpp"

#include "orbitq/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>

namespace orbitq {

using nlohmann::json;

Format parse_format(std::string_view text)
{
	if (text == "md" || text == "markdown")
		return Format::Markdown;
	if (text == "csv")
		return Format::Csv;
	if (text == "json")
		return Format::Json;
	throw InvalidInput(fmt::format("unknown format '{}'", text));
}

bool Record::passed() const
{
	return identity_holds() &&
	       std::all_of(checks.begin(), checks.end(), [](auto const &kv) { return kv.second; });
}

int VerificationReport::passed_count() const
{
	return static_cast<int>(std::count_if(records.begin(), records.end(),
	                                      [](Record const &r) { return r.passed(); }));
}

int VerificationReport::failed_count() const
{
	return static_cast<int>(records.size()) - passed_count();
}

std::string to_json(VerificationReport const &r)
{
	json records = json::array();
	for (auto const &rec : r.records) {
		json checks = json::object();
		for (auto const &[k, v] : rec.checks)
			checks[k] = v;
		records.push_back({{"type", rec.type},
		                   {"family", rec.family.empty() ? json(nullptr) : json(rec.family)},
		                   {"q", rec.q},
		                   {"case", rec.case_tag},
		                   {"orbit", rec.orbit},
		                   {"dim_orbit", rec.dim_orbit},
		                   {"integral_count", rec.integral_count},
		                   {"var_dim_joseph", rec.var_dim_joseph},
		                   {"checks", checks},
		                   {"passed", rec.passed()}});
	}
	json doc = {{"records", records},
	            {"summary",
	             {{"records", r.records.size()}, {"passed", r.passed_count()}, {"failed", r.failed_count()}}}};
	return doc.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text)
{
	VerificationReport r;
	try {
		auto doc = json::parse(text);
		for (auto const &j : doc.at("records")) {
			Record rec;
			rec.type = j.at("type").get<std::string>();
			if (!j.at("family").is_null())
				rec.family = j.at("family").get<std::string>();
			rec.q = j.at("q").get<int>();
			rec.case_tag = j.at("case").get<std::string>();
			rec.orbit = j.at("orbit").get<std::string>();
			rec.dim_orbit = j.at("dim_orbit").get<int>();
			rec.integral_count = j.at("integral_count").get<int>();
			rec.var_dim_joseph = j.at("var_dim_joseph").get<int>();
			for (auto const &[k, v] : j.at("checks").items())
				rec.checks[k] = v.get<bool>();
			if (j.at("passed").get<bool>() != rec.passed())
				throw InvalidInput(fmt::format("record {} q={} has an inconsistent 'passed' flag", rec.type, rec.q));
			r.records.push_back(std::move(rec));
		}
		auto const &s = doc.at("summary");
		if (s.at("records").get<std::size_t>() != r.records.size() ||
		    s.at("passed").get<int>() != r.passed_count() || s.at("failed").get<int>() != r.failed_count())
			throw InvalidInput("summary does not match the records");
	} catch (json::exception const &e) {
		throw InvalidInput(std::string("malformed report: ") + e.what());
	}
	return r;
}

std::string csv_field(std::string_view s)
{
	if (s.find_first_of(",\"\r\n") == std::string_view::npos)
		return std::string(s);
	std::string out = "\"";
	for (char c : s) {
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

namespace {

std::string checks_text(Record const &rec, std::string_view sep)
{
	std::vector<std::string> parts;
	for (auto const &[k, v] : rec.checks)
		parts.push_back(fmt::format("{}={}", k, v ? "ok" : "FAIL"));
	return fmt::format("{}", fmt::join(parts, sep));
}

} // namespace

std::string to_csv(VerificationReport const &r)
{
	std::string out = "type,family,q,case,orbit,dim_orbit,integral_count,var_dim_joseph,checks,status\r\n";
	for (auto const &rec : r.records)
		out += fmt::format("{},{},{},{},{},{},{},{},{},{}\r\n", csv_field(rec.type), csv_field(rec.family),
		                   rec.q, csv_field(rec.case_tag), csv_field(rec.orbit), rec.dim_orbit,
		                   rec.integral_count, rec.var_dim_joseph, csv_field(checks_text(rec, ";")),
		                   rec.passed() ? "pass" : "FAIL");
	return out;
}

std::string to_markdown(VerificationReport const &r)
{
	std::string out = "| type | family | q | case | O_q | dim O_q | #Delta(lambda_q) | dim Var(J) | checks | status |\n"
	                  "|---|---|---|---|---|---|---|---|---|---|\n";
	for (auto const &rec : r.records)
		out += fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n", rec.type,
		                   rec.family.empty() ? "-" : rec.family, rec.q, rec.case_tag, rec.orbit,
		                   rec.dim_orbit, rec.integral_count, rec.var_dim_joseph, checks_text(rec, " "),
		                   rec.passed() ? "pass" : "FAIL");
	out += fmt::format("\n{} records, {} passed, {} failed\n", r.records.size(), r.passed_count(),
	                   r.failed_count());
	return out;
}

std::string emit(VerificationReport const &r, Format f)
{
	switch (f) {
	case Format::Markdown: return to_markdown(r);
	case Format::Csv: return to_csv(r);
	case Format::Json: return to_json(r);
	}
	return {};
}

} // namespace orbitq
