// Copyright 2026 The cddgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "cddgate/cddgate.h"

namespace {

namespace fs = std::filesystem;

struct ConfigHandle {
  cddgate_config* p = nullptr;
  ~ConfigHandle() { cddgate_config_free(p); }
};

struct ReportHandle {
  cddgate_report* p = nullptr;
  ~ReportHandle() { cddgate_report_free(p); }
};

const char* kQuick = R"({"grids":{"geodesic_steps":1000,"cdd_steps_per_fast_period":2},
  "variational":{"max_iter":3},"krotov":{"max_iter":3},
  "montecarlo":{"n_samples":5,"max_evals":40}})";

TEST(CApi, VersionAndEmptyError) {
  EXPECT_STREQ(cddgate_version(), "0.1.0");
  EXPECT_NE(cddgate_last_error(), nullptr);
}

TEST(CApi, NullArgumentsAreInvalidInput) {
  EXPECT_EQ(cddgate_config_default(nullptr), CDDGATE_ERR_INVALID_INPUT);
  EXPECT_NE(std::string(cddgate_last_error()).find("NULL"), std::string::npos);
  double f = 0;
  EXPECT_EQ(cddgate_cdd_fidelity(nullptr, 2.0, &f), CDDGATE_ERR_INVALID_INPUT);
  cddgate_report_free(nullptr);
  cddgate_config_free(nullptr);
  cddgate_string_free(nullptr);
}

TEST(CApi, ConfigErrors) {
  ConfigHandle c;
  EXPECT_EQ(cddgate_config_from_json(R"({"nope":1})", &c.p), CDDGATE_ERR_CONFIG);
  EXPECT_EQ(c.p, nullptr);
  EXPECT_NE(std::string(cddgate_last_error()).find("nope"), std::string::npos);
  EXPECT_EQ(cddgate_config_load("/nonexistent/file.json", &c.p), CDDGATE_ERR_CONFIG);
}

TEST(CApi, ConfigRoundTripAndHash) {
  ConfigHandle a, b;
  ASSERT_EQ(cddgate_config_default(&a.p), CDDGATE_OK);
  char* text = nullptr;
  ASSERT_EQ(cddgate_config_to_json(a.p, &text), CDDGATE_OK);
  ASSERT_EQ(cddgate_config_from_json(text, &b.p), CDDGATE_OK);
  cddgate_string_free(text);
  char ha[17], hb[17];
  ASSERT_EQ(cddgate_config_hash(a.p, ha), CDDGATE_OK);
  ASSERT_EQ(cddgate_config_hash(b.p, hb), CDDGATE_OK);
  EXPECT_STREQ(ha, hb);
  EXPECT_EQ(std::string(ha).size(), 16u);
}

TEST(CApi, ConfigFromEnvironment) {
  const fs::path p = fs::temp_directory_path() / "cddgate_capi_env.json";
  FILE* f = std::fopen(p.c_str(), "w");
  std::fputs(R"({"variational":{"seed":77}})", f);
  std::fclose(f);
  ::setenv("CDDGATE_CONFIG", p.c_str(), 1);
  ConfigHandle c;
  ASSERT_EQ(cddgate_config_load(nullptr, &c.p), CDDGATE_OK);
  ::unsetenv("CDDGATE_CONFIG");
  char* text = nullptr;
  ASSERT_EQ(cddgate_config_to_json(c.p, &text), CDDGATE_OK);
  EXPECT_NE(std::string(text).find("\"seed\": 77"), std::string::npos);
  cddgate_string_free(text);
  fs::remove(p);
}

TEST(CApi, CddFidelityDriveOff) {
  ConfigHandle c;
  ASSERT_EQ(cddgate_config_default(&c.p), CDDGATE_OK);
  double f = 0;
  ASSERT_EQ(cddgate_cdd_fidelity(c.p, 0.0, &f), CDDGATE_OK);
  EXPECT_NEAR(f, 0.62568233, 1e-7);
  EXPECT_EQ(cddgate_cdd_fidelity(c.p, -1.0, &f), CDDGATE_ERR_CONFIG);
}

TEST(CApi, OptimizeAndInspectReport) {
  ConfigHandle c;
  ASSERT_EQ(cddgate_config_from_json(kQuick, &c.p), CDDGATE_OK);
  for (const char* method : {"variational", "montecarlo", "krotov"}) {
    ReportHandle r;
    ASSERT_EQ(cddgate_optimize(c.p, method, "cz", "xyz", &r.p), CDDGATE_OK) << cddgate_last_error();
    EXPECT_GE(cddgate_report_energy(r.p), 0.0);
    const double inf = cddgate_report_infidelity(r.p);
    EXPECT_GE(inf, 0.0);
    EXPECT_LE(inf, 1.0);
    const size_t n = cddgate_report_control_nodes(r.p);
    ASSERT_EQ(n, 1001u);
    std::vector<double> t(n), h(6 * n);
    ASSERT_EQ(cddgate_report_controls(r.p, t.data(), h.data()), CDDGATE_OK);
    EXPECT_DOUBLE_EQ(t.front(), 0.0);
    EXPECT_NEAR(t.back(), 40.0, 1e-12);
    char* json = nullptr;
    ASSERT_EQ(cddgate_report_to_json(r.p, &json), CDDGATE_OK);
    EXPECT_NE(std::string(json).find(method), std::string::npos);
    cddgate_string_free(json);
    double f = 0, fs = 0;
    ASSERT_EQ(cddgate_report_swap_fidelity(r.p, &f, &fs), CDDGATE_OK);
    EXPECT_NEAR(f, fs, 1e-8) << method;
  }
}

TEST(CApi, OptimizeRejectsBadArguments) {
  ConfigHandle c;
  ASSERT_EQ(cddgate_config_from_json(kQuick, &c.p), CDDGATE_OK);
  ReportHandle r;
  EXPECT_EQ(cddgate_optimize(c.p, "grape", "cx", "xyz", &r.p), CDDGATE_ERR_CONFIG);
  EXPECT_EQ(cddgate_optimize(c.p, "variational", "toffoli", "xyz", &r.p), CDDGATE_ERR_CONFIG);
  EXPECT_EQ(cddgate_optimize(c.p, "variational", "cx", "xq", &r.p), CDDGATE_ERR_INVALID_INPUT);
  EXPECT_EQ(cddgate_optimize(c.p, "variational", "custom:/nonexistent.json", "xyz", &r.p),
            CDDGATE_ERR_CONFIG);
  EXPECT_EQ(r.p, nullptr);
}

TEST(CApi, WriteAndVerify) {
  ConfigHandle c;
  ASSERT_EQ(cddgate_config_from_json(kQuick, &c.p), CDDGATE_OK);
  ReportHandle r;
  ASSERT_EQ(cddgate_optimize(c.p, "variational", "cx", "xyz", &r.p), CDDGATE_OK);
  const fs::path dir = fs::temp_directory_path() / "cddgate_capi_write";
  fs::remove_all(dir);
  ASSERT_EQ(cddgate_report_write(r.p, dir.c_str()), CDDGATE_OK) << cddgate_last_error();
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  const std::string csv = (dir / "controls.csv").string();
  double f = -1, f_cdd = -1;
  ASSERT_EQ(cddgate_verify(c.p, csv.c_str(), "cx", 2.0, &f, &f_cdd), CDDGATE_OK)
      << cddgate_last_error();
  EXPECT_GE(f, 0.0);
  EXPECT_LE(f, 1.0);
  EXPECT_GT(f_cdd, 0.9);

  ConfigHandle other;
  ASSERT_EQ(cddgate_config_from_json(R"({"physical":{"tau_ns":20}})", &other.p), CDDGATE_OK);
  EXPECT_EQ(cddgate_verify(other.p, csv.c_str(), "cx", 2.0, &f, &f_cdd), CDDGATE_ERR_CONFIG);
  fs::remove_all(dir);
}

TEST(CApi, ReferenceEnergies) {
  double e = 0;
  ASSERT_EQ(cddgate_reference_energy("cx", "yz", "montecarlo", &e), CDDGATE_OK);
  EXPECT_DOUBLE_EQ(e, 6.48627);
  EXPECT_EQ(cddgate_reference_energy("cz", "xyz", "krotov", &e), CDDGATE_ERR_INVALID_INPUT);
}

}  // namespace
