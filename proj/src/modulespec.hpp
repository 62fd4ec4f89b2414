#pragma once

#include <memory>
#include <string>

#include "drinfeld.hpp"
#include "modstab.hpp"

namespace ytw {

// JSON schemas (documented in the README):
//
// module build spec:
//   {"flavor":"sp","n":2,"mode":"gl"|"g","build":["tensor",["natural"],["natural"]]}
//   nodes: ["natural"] ["dual"] ["trivial"] ["one_dimensional",<scalar>]
//          ["tensor",node,...] ["sym_power",k,node] ["wedge_power",k,node]
//          ["highest_weight_submodule",node,[<scalar>,...]]
//   scalars are strings like "1", "-1/2".
//
// yangian module spec (pipelines):
//   {"flavor":"sp","n":1,"gl_factors":[{"base":[1,-1],"shift":"0"}],
//    "v_const":0,"sharp":false}
//
// drinfeld data:
//   {"P":[["0","0","1"],...],"gamma":"1/2","type":"A","g":["1"]}
//
// stability spec:
//   {"name":"...","flavor":"sp","tail":[["c0","c1",...],...]}

GModule build_module_from_json(const std::string& json_text, const Field& f,
                               bool allow_outside_alcove = false);

YangianModuleSpec yangian_spec_from_json(const std::string& json_text);
std::string yangian_spec_to_json(const YangianModuleSpec& spec);

DrinfeldData drinfeld_data_from_json(const std::string& json_text, const Field& f);
std::string drinfeld_data_to_json(const DrinfeldData& data);

StabilitySpec stability_spec_from_json(const std::string& json_text);
std::string stability_report_to_json(const StabilityReport& report);

}  // namespace ytw
