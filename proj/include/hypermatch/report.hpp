#pragma once

#include <string>

#include <gmpxx.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/hg_io.hpp"
#include "hypermatch/optimize.hpp"
#include "hypermatch/stability.hpp"
#include "hypermatch/verify.hpp"

namespace hypermatch {

enum class Format { json, tsv };

Format format_from_string(const std::string& name);

// Big integers become JSON numbers when they fit in 64 bits, strings otherwise.
Json big_to_json(const mpz_class& x);
mpz_class big_from_json(const Json& j);

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);
std::string tsv_header(const BoundReport& r);
std::string to_tsv(const BoundReport& r);

Json to_json(const VerifyResult& r);
VerifyResult verify_result_from_json(const Json& j);
std::string to_tsv(const VerifyResult& r);

Json to_json(const ClosenessReport& r);
std::string to_tsv(const ClosenessReport& r);

Json to_json(const GoodnessReport& r);

Json to_json(const BoundTable& t);
std::string to_tsv(const BoundTable& t);

Json to_json(const FractionalAssignment& f);
Json to_json(const DualityReport& r);

}  // namespace hypermatch
