#pragma once

#include <string>
#include <vector>

// The rubric exemplar corpus with the finding sets the deterministic checker
// documents for each claim. Expected rules are the full-lint multiset
// (structure + punctuation + antecedent), sorted.
namespace fixtures {

struct LintFixture {
  std::string name;
  std::string body;
  bool parses = true;
  int elements = 0;  // meaningful when parses
  int trailing = 0;
  std::vector<std::string> expected_rules;  // sorted multiset of rule ids
};

inline const std::vector<LintFixture>& lint_corpus() {
  static const std::vector<LintFixture> corpus = {
      {"std_device",
       "A device for processing data, comprising: a memory configured to store data; "
       "a processor coupled to the memory; and an interface connected to the processor.",
       true, 3, 0, {}},
      {"cs_1pt", "Processing data with memory and processor.", false, 0, 0,
       {"STRUCT-NOTRANS"}},
      {"cs_2pt",
       "A data processing device having memory for storing data processor for "
       "processing interface for connecting.",
       true, 1, 0, {"PUNC-COLON"}},
      {"cs_3pt",
       "A device for processing data comprising: a memory that stores data a "
       "processor connected to memory an interface; wherein the processor processes "
       "data.",
       true, 1, 1, {}},
      {"cs_4pt",
       "A device for processing data, comprising: a memory configured to store data; "
       "a processor coupled to the memory; an interface connected to the processor; "
       "wherein the interface transmits data.",
       true, 3, 1, {"PUNC-AND"}},
      {"cs_5pt",
       "A device for processing data, comprising: a memory configured to store input "
       "data; a processor coupled to the memory and configured to process data; an "
       "interface coupled to the processor; wherein the processor updates rules based "
       "on feedback.",
       true, 3, 1, {"PUNC-AND"}},
      {"cp_1pt", "A device with memory processor and interface.", false, 0, 0,
       {"STRUCT-NOTRANS"}},
      {"cp_2pt", "A device comprising memory; processor; interface.", true, 3, 0,
       {"PUNC-AND", "PUNC-COLON"}},
      {"cp_3pt", "A device comprising: memory; processor; and interface.", true, 3, 0,
       {}},
      {"cp_4pt", "A device, comprising: memory; processor; and interface.", true, 3, 0,
       {}},
      {"cp_3pt_noperiod", "A device comprising: memory; processor; and interface",
       true, 3, 0, {"PUNC-PERIOD"}},
      {"ab_std",
       "A device, comprising: a display; a processor connected to the display; and a "
       "battery, wherein the battery powers the processor and the display.",
       true, 3, 0, {}},
      {"ab_1pt",
       "The display and the CPU, wherein the memory connects to the processor.", false,
       0, 0, {"AB-NOANTE", "AB-NOANTE", "AB-NOANTE", "AB-NOANTE", "STRUCT-NOTRANS"}},
      {"ab_2pt", "The display and a processor, wherein the CPU connects to memory.",
       false, 0, 0, {"AB-NOANTE", "AB-NOANTE", "STRUCT-NOTRANS"}},
      {"ab_3pt",
       "A display; the processor connected to the display; and the memory connected "
       "to the processor.",
       false, 0, 0, {"AB-NOANTE", "AB-NOANTE", "AB-NOANTE", "STRUCT-NOTRANS"}},
      {"ab_4pt",
       "A display; a processor connected to the display; and the processor connected "
       "to a memory.",
       false, 0, 0, {"STRUCT-NOTRANS"}},
      {"ab_5pt",
       "A display; a processor connected to the display; a memory; and a battery "
       "connected to the processor and the memory.",
       false, 0, 0, {"STRUCT-NOTRANS"}},
      {"er_std",
       "A device, comprising: a touchscreen display; a processor connected to the "
       "touchscreen display; and a battery powering the processor and the touchscreen "
       "display.",
       true, 3, 0, {}},
      {"er_1pt",
       "A device including a screen connected to CPU, wherein the display is "
       "connected to processor, and a battery powering the touchscreen.",
       true, 1, 0, {"AB-NOANTE", "AB-NOANTE", "PUNC-COLON"}},
      {"er_2pt",
       "A touchscreen display; a processor connected to the screen; and a battery "
       "powering the CPU and display.",
       false, 0, 0, {"AB-NOANTE", "AB-NOANTE", "STRUCT-NOTRANS"}},
      {"er_3pt",
       "A touchscreen display; a processor connected to the touchscreen display; and "
       "a battery powering the processor and display.",
       false, 0, 0, {"STRUCT-NOTRANS"}},
      {"er_4pt",
       "A touchscreen display; a processor connected to said touchscreen display; and "
       "a battery powering said processor and said touchscreen display.",
       false, 0, 0, {"STRUCT-NOTRANS"}},
      {"er_5pt",
       "A device, comprising: a touchscreen display; a processor operatively "
       "connected to said touchscreen display; and a battery configured to power said "
       "processor and said touchscreen display.",
       true, 3, 0, {}},
      {"vu_std",
       "A data processing device, comprising: a unique processing unit having "
       "specific computational capabilities; a specialized memory unit configured to "
       "enhance processing speed; and a novel interface designed to optimize data "
       "transfer.",
       true, 3, 0, {}},
      {"vu_1pt", "A data processing device comprising a processor and memory.", true,
       1, 0, {"PUNC-COLON"}},
      {"vu_2pt",
       "A data processing device with a high-speed processor and large memory.",
       false, 0, 0, {"STRUCT-NOTRANS"}},
      {"vu_3pt",
       "A data processing device comprising: a parallel processing processor; a "
       "high-speed cache memory; and a data optimization interface.",
       true, 3, 0, {}},
      {"vu_4pt",
       "A data processing device comprising: a multi-core parallel processor; a "
       "hierarchical cache memory structure; and a real-time data optimization "
       "interface.",
       true, 3, 0, {}},
      {"vu_5pt",
       "A data processing device comprising: an AI-accelerated multi-core processor; "
       "a dynamic memory allocation hierarchical cache; and an intelligent interface "
       "with adaptive data optimization algorithms.",
       true, 3, 0, {}},
      {"as_std",
       "A data processing device, comprising: a 2.4 GHz processor specifically "
       "configured for image processing; a 512GB solid-state memory connected to the "
       "processor; and a 4K resolution display interface operating at 60Hz refresh "
       "rate.",
       true, 3, 0, {"AB-NOANTE"}},
      {"as_1pt", "An improved device that processes data better.", false, 0, 0,
       {"STRUCT-NOTRANS"}},
      {"as_2pt",
       "An enhanced processing device with a high-speed processor and large memory.",
       false, 0, 0, {"STRUCT-NOTRANS"}},
      {"as_3pt",
       "A processing device comprising: a processor operating above 1GHz; and memory "
       "exceeding 256GB.",
       true, 2, 0, {}},
      {"as_4pt",
       "A processing device comprising: a 2.4GHz multi-core processor; a 512GB SSD; "
       "and a 4K resolution display.",
       true, 3, 0, {}},
      {"as_5pt",
       "A processing device comprising: a 2.4GHz 8-core processor performing 1M "
       "operations/second; a 512GB NVMe SSD with 3000MB/s read speed; and a 4K 60Hz "
       "HDR display.",
       true, 3, 0, {}},
      {"trailer_tongue",
       "1. An extendible trailer tongue comprising: a first tubular member; a second "
       "tubular member telescopically received within the first tubular member; and a "
       "locking mechanism to secure the second tubular member in a selected position "
       "relative to the first tubular member.",
       true, 3, 0, {}},
      {"biometric_gold",
       "A method for processing biometric data, comprising: receiving sensor data; "
       "extracting features; and authenticating a user.",
       true, 3, 0, {}},
      {"biometric_llm",
       "A method for biometric processing, comprising: obtaining sensor data; "
       "processing features; and performing authentication.",
       true, 3, 0, {}},
  };
  return corpus;
}

}  // namespace fixtures
