// Shared helpers for the test programs.

#pragma once

#include <string>

#include "cpcf/formula.h"
#include "cpcf/model.h"

#ifndef CPCF_FIXTURE_DIR
#define CPCF_FIXTURE_DIR "fixtures"
#endif

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(CPCF_FIXTURE_DIR) + "/" + name; }

inline cpcf::SphereModel fixture(const std::string& name) { return cpcf::load_model_file(fixture_path(name)); }

inline cpcf::Formula f(const char* text) { return cpcf::parse(text); }

inline cpcf::CpSet g(const char* text) { return cpcf::parse_cpset(text); }

}  // namespace testing
