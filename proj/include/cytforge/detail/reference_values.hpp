#pragma once

// Generated by tests/oracle/embed_reference.py from tests/oracle/expected.json.

namespace cytforge::detail {

inline constexpr const char* kReferenceValuesJson = R"json({"ansatz":{"10":{"F":["-18+2*sqrt(114)","4-1/2*sqrt(114)","4-1/2*sqrt(114)","4-1/2*sqrt(114)","4-1/2*sqrt(114)","7-2/3*sqrt(114)","7-2/3*sqrt(114)","7-2/3*sqrt(114)","7-2/3*sqrt(114)","7-2/3*sqrt(114)","7-2/3*sqrt(114)"],"QFF":"4","QF_antiK":"4","Qw1F":"2","Qw2F":"2","curve_count":56,"min_curve_value":"-7+2/3*sqrt(114)","n":"-18+2*sqrt(114)","n_1to4":"-4+1/2*sqrt(114)","n_rest":"-7+2/3*sqrt(114)"},"11":{"F":["-34/5+4/5*sqrt(161)","6/5-1/5*sqrt(161)","6/5-1/5*sqrt(161)","6/5-1/5*sqrt(161)","6/5-1/5*sqrt(161)","14/5-8/35*sqrt(161)","14/5-8/35*sqrt(161)","14/5-8/35*sqrt(161)","14/5-8/35*sqrt(161)","14/5-8/35*sqrt(161)","14/5-8/35*sqrt(161)","14/5-8/35*sqrt(161)"],"QFF":"4","QF_antiK":"4","Qw1F":"2","Qw2F":"2","curve_count":67,"min_curve_value":"-14/5+8/35*sqrt(161)","n":"-34/5+4/5*sqrt(161)","n_1to4":"-6/5+1/5*sqrt(161)","n_rest":"-14/5+8/35*sqrt(161)"},"12":{"F":["-4+3*sqrt(6)","1/2-3/4*sqrt(6)","1/2-3/4*sqrt(6)","1/2-3/4*sqrt(6)","1/2-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)","7/4-3/4*sqrt(6)"],"QFF":"4","QF_antiK":"4","Qw1F":"2","Qw2F":"2","curve_count":79,"min_curve_value":"-7/4+3/4*sqrt(6)","n":"-4+3*sqrt(6)","n_1to4":"-1/2+3/4*sqrt(6)","n_rest":"-7/4+3/4*sqrt(6)"},"9":{"F":["38-20*sqrt(3)","-10+5*sqrt(3)","-10+5*sqrt(3)","-10+5*sqrt(3)","-10+5*sqrt(3)","-14+8*sqrt(3)","-14+8*sqrt(3)","-14+8*sqrt(3)","-14+8*sqrt(3)","-14+8*sqrt(3)"],"QFF":"4","QF_antiK":"4","Qw1F":"2","Qw2F":"2","curve_count":45,"min_curve_value":"14-8*sqrt(3)","n":"38-20*sqrt(3)","n_1to4":"10-5*sqrt(3)","n_rest":"14-8*sqrt(3)"}},"ansatz_quadratic":{"10":{"coeffs":[2,72,-264],"max_root_gt_3":true,"roots":["-18-2*sqrt(114)","-18+2*sqrt(114)"]},"11":{"coeffs":[5,68,-284],"max_root_gt_3":true,"roots":["-34/5-4/5*sqrt(161)","-34/5+4/5*sqrt(161)"]},"12":{"coeffs":[8,64,-304],"max_root_gt_3":true,"roots":["-4-3*sqrt(6)","-4+3*sqrt(6)"]},"13":{"coeffs":[11,60,-324],"max_root_gt_3":true,"roots":["-30/11-12/11*sqrt(31)","-30/11+12/11*sqrt(31)"]},"14":{"coeffs":[14,56,-344],"max_root_gt_3":true,"roots":["-2-10/7*sqrt(14)","-2+10/7*sqrt(14)"]},"15":{"coeffs":[17,52,-364],"max_root_gt_3":true,"roots":["-26/17-4/17*sqrt(429)","-26/17+4/17*sqrt(429)"]},"16":{"coeffs":[20,48,-384],"max_root_gt_3":true,"roots":["-6/5-2/5*sqrt(129)","-6/5+2/5*sqrt(129)"]},"17":{"coeffs":[23,44,-404],"max_root_gt_3":true,"roots":["-22/23-4/23*sqrt(611)","-22/23+4/23*sqrt(611)"]},"18":{"coeffs":[26,40,-424],"max_root_gt_3":true,"roots":["-10/13-2/13*sqrt(714)","-10/13+2/13*sqrt(714)"]},"19":{"coeffs":[29,36,-444],"max_root_gt_3":true,"roots":["-18/29-20/29*sqrt(33)","-18/29+20/29*sqrt(33)"]},"20":{"coeffs":[32,32,-464],"max_root_gt_3":true,"roots":["-1/2-1/2*sqrt(59)","-1/2+1/2*sqrt(59)"]},"21":{"coeffs":[35,28,-484],"max_root_gt_3":true,"roots":["-2/5-12/35*sqrt(119)","-2/5+12/35*sqrt(119)"]},"22":{"coeffs":[38,24,-504],"max_root_gt_3":true,"roots":["-6/19-6/19*sqrt(134)","-6/19+6/19*sqrt(134)"]},"23":{"coeffs":[41,20,-524],"max_root_gt_3":true,"roots":["-10/41-4/41*sqrt(1349)","-10/41+4/41*sqrt(1349)"]},"24":{"coeffs":[44,16,-544],"max_root_gt_3":true,"roots":["-2/11-10/11*sqrt(15)","-2/11+10/11*sqrt(15)"]},"25":{"coeffs":[47,12,-564],"max_root_gt_3":true,"roots":["-6/47-4/47*sqrt(1659)","-6/47+4/47*sqrt(1659)"]},"26":{"coeffs":[50,8,-584],"max_root_gt_3":true,"roots":["-2/25-2/25*sqrt(1826)","-2/25+2/25*sqrt(1826)"]},"27":{"coeffs":[53,4,-604],"max_root_gt_3":true,"roots":["-2/53-4/53*sqrt(2001)","-2/53+4/53*sqrt(2001)"]},"28":{"coeffs":[56,0,-624],"max_root_gt_3":true,"roots":["0-1/7*sqrt(546)","0+1/7*sqrt(546)"]},"29":{"coeffs":[59,-4,-644],"max_root_gt_3":true,"roots":["2/59-20/59*sqrt(95)","2/59+20/59*sqrt(95)"]},"30":{"coeffs":[62,-8,-664],"max_root_gt_3":true,"roots":["2/31-6/31*sqrt(286)","2/31+6/31*sqrt(286)"]},"9":{"coeffs":[-1,76,-244],"max_root_gt_3":true,"roots":["38-20*sqrt(3)","38+20*sqrt(3)"]}},"anticanonical":{"3":{"QFF":24,"alpha_pairings":[1,0],"beta_pairings":[0,-1],"curve_count":6,"curve_value":[2],"hodge_w2_pp":-2,"hodge_w2_trace":"0","lambda":["1","0"],"snf":[1,1]},"4":{"QFF":20,"alpha_pairings":[1,0],"beta_pairings":[0,-1],"curve_count":10,"curve_value":[2],"hodge_w2_pp":-2,"hodge_w2_trace":"0","lambda":["1","0"],"snf":[1,1]},"5":{"QFF":16,"alpha_pairings":[1,0],"beta_pairings":[0,-1],"curve_count":16,"curve_value":[2],"hodge_w2_pp":-2,"hodge_w2_trace":"0","lambda":["1","0"],"snf":[1,1]},"6":{"QFF":12,"alpha_pairings":[1,0],"beta_pairings":[0,-1],"curve_count":27,"curve_value":[2],"hodge_w2_pp":-2,"hodge_w2_trace":"0","lambda":["1","0"],"snf":[1,1]},"7":{"QFF":8,"alpha_pairings":[1,0],"beta_pairings":[0,-1],"curve_count":56,"curve_value":[2],"hodge_w2_pp":-2,"hodge_w2_trace":"0","lambda":["1","0"],"snf":[1,1]},"8":{"QFF":4,"alpha_pairings":[1,0],"beta_pairings":[0,-1],"curve_count":240,"curve_value":[2],"hodge_w2_pp":-2,"hodge_w2_trace":"0","lambda":["1","0"],"snf":[1,1]}},"c1_squares":{"1":8,"10":-1,"11":-2,"12":-3,"2":7,"3":6,"4":5,"5":4,"6":3,"7":2,"8":1,"9":0},"cp2":{"divisibility":3,"lambda_at_scale":"3","scale":"2/3"},"cubic_witness":{"10":{"alpha_pairings":[1,0],"beta_pairings":[0,-1],"c1_is_w1_plus_w2":true,"snf":[1,1]},"11":{"alpha_pairings":[1,0],"beta_pairings":[0,-1],"c1_is_w1_plus_w2":true,"snf":[1,1]},"12":{"alpha_pairings":[1,0],"beta_pairings":[0,-1],"c1_is_w1_plus_w2":true,"snf":[1,1]},"9":{"alpha_pairings":[1,0],"beta_pairings":[0,-1],"c1_is_w1_plus_w2":true,"snf":[1,1]}},"divisibility":{"1":1,"10":1,"11":1,"12":1,"2":1,"3":1,"4":1,"5":1,"6":1,"7":1,"8":1,"9":1,"cp2":3,"quadric":2},"exact_sign":{"3-2*sqrt(3)":-1,"38-20*sqrt(3)":1},"exceptional_counts":{"2":3,"3":6,"4":10,"5":16,"6":27,"7":56,"8":240},"field_ops":{"conjugate_product":"244","half_plus_third":"5/6"},"kummer":{"QFw":[0,0],"skt_total":-8},"labels":{"10":"9(S\u00b2\u00d7S\u2074) # 10(S\u00b3\u00d7S\u00b3)","11":"10(S\u00b2\u00d7S\u2074) # 11(S\u00b3\u00d7S\u00b3)","12":"11(S\u00b2\u00d7S\u2074) # 12(S\u00b3\u00d7S\u00b3)","2":"1(S\u00b2\u00d7S\u2074) # 2(S\u00b3\u00d7S\u00b3)","3":"2(S\u00b2\u00d7S\u2074) # 3(S\u00b3\u00d7S\u00b3)","4":"3(S\u00b2\u00d7S\u2074) # 4(S\u00b3\u00d7S\u00b3)","5":"4(S\u00b2\u00d7S\u2074) # 5(S\u00b3\u00d7S\u00b3)","6":"5(S\u00b2\u00d7S\u2074) # 6(S\u00b3\u00d7S\u00b3)","7":"6(S\u00b2\u00d7S\u2074) # 7(S\u00b3\u00d7S\u00b3)","8":"7(S\u00b2\u00d7S\u2074) # 8(S\u00b3\u00d7S\u00b3)","9":"8(S\u00b2\u00d7S\u2074) # 9(S\u00b3\u00d7S\u00b3)","kummer":"20(S\u00b2\u00d7S\u2074) # 21(S\u00b3\u00d7S\u00b3)","quadric":"S\u00b3\u00d7S\u00b3"},"quadric":{"QFF":"1/2","defect":["0","0"],"hodge_C_pp":"-1/2","hodge_C_trace":"1","lambda_C":"2","lambda_D":"2","scale_C_minusD":"1/2","skt_total":0},"snf_examples":{"diag23":[1,6],"rows_311_1m2m2":[1,7]},"solve_quadratic_k10":["-18-2*sqrt(114)","-18+2*sqrt(114)"],"spectral":{"10":{"betti":[1,0,8,18,8,0,1],"e2":[[1,0,10,0,1],[2,0,20,0,2],[1,0,10,0,1]],"e3":[[1,0,8,0,0],[0,0,18,0,0],[0,0,8,0,1]],"euler":0},"11":{"betti":[1,0,9,20,9,0,1],"e2":[[1,0,11,0,1],[2,0,22,0,2],[1,0,11,0,1]],"e3":[[1,0,9,0,0],[0,0,20,0,0],[0,0,9,0,1]],"euler":0},"12":{"betti":[1,0,10,22,10,0,1],"e2":[[1,0,12,0,1],[2,0,24,0,2],[1,0,12,0,1]],"e3":[[1,0,10,0,0],[0,0,22,0,0],[0,0,10,0,1]],"euler":0},"13":{"betti":[1,0,11,24,11,0,1],"e2":[[1,0,13,0,1],[2,0,26,0,2],[1,0,13,0,1]],"e3":[[1,0,11,0,0],[0,0,24,0,0],[0,0,11,0,1]],"euler":0},"14":{"betti":[1,0,12,26,12,0,1],"e2":[[1,0,14,0,1],[2,0,28,0,2],[1,0,14,0,1]],"e3":[[1,0,12,0,0],[0,0,26,0,0],[0,0,12,0,1]],"euler":0},"15":{"betti":[1,0,13,28,13,0,1],"e2":[[1,0,15,0,1],[2,0,30,0,2],[1,0,15,0,1]],"e3":[[1,0,13,0,0],[0,0,28,0,0],[0,0,13,0,1]],"euler":0},"16":{"betti":[1,0,14,30,14,0,1],"e2":[[1,0,16,0,1],[2,0,32,0,2],[1,0,16,0,1]],"e3":[[1,0,14,0,0],[0,0,30,0,0],[0,0,14,0,1]],"euler":0},"17":{"betti":[1,0,15,32,15,0,1],"e2":[[1,0,17,0,1],[2,0,34,0,2],[1,0,17,0,1]],"e3":[[1,0,15,0,0],[0,0,32,0,0],[0,0,15,0,1]],"euler":0},"18":{"betti":[1,0,16,34,16,0,1],"e2":[[1,0,18,0,1],[2,0,36,0,2],[1,0,18,0,1]],"e3":[[1,0,16,0,0],[0,0,34,0,0],[0,0,16,0,1]],"euler":0},"19":{"betti":[1,0,17,36,17,0,1],"e2":[[1,0,19,0,1],[2,0,38,0,2],[1,0,19,0,1]],"e3":[[1,0,17,0,0],[0,0,36,0,0],[0,0,17,0,1]],"euler":0},"2":{"betti":[1,0,0,2,0,0,1],"e2":[[1,0,2,0,1],[2,0,4,0,2],[1,0,2,0,1]],"e3":[[1,0,0,0,0],[0,0,2,0,0],[0,0,0,0,1]],"euler":0},"20":{"betti":[1,0,18,38,18,0,1],"e2":[[1,0,20,0,1],[2,0,40,0,2],[1,0,20,0,1]],"e3":[[1,0,18,0,0],[0,0,38,0,0],[0,0,18,0,1]],"euler":0},"21":{"betti":[1,0,19,40,19,0,1],"e2":[[1,0,21,0,1],[2,0,42,0,2],[1,0,21,0,1]],"e3":[[1,0,19,0,0],[0,0,40,0,0],[0,0,19,0,1]],"euler":0},"22":{"betti":[1,0,20,42,20,0,1],"e2":[[1,0,22,0,1],[2,0,44,0,2],[1,0,22,0,1]],"e3":[[1,0,20,0,0],[0,0,42,0,0],[0,0,20,0,1]],"euler":0},"3":{"betti":[1,0,1,4,1,0,1],"e2":[[1,0,3,0,1],[2,0,6,0,2],[1,0,3,0,1]],"e3":[[1,0,1,0,0],[0,0,4,0,0],[0,0,1,0,1]],"euler":0},"4":{"betti":[1,0,2,6,2,0,1],"e2":[[1,0,4,0,1],[2,0,8,0,2],[1,0,4,0,1]],"e3":[[1,0,2,0,0],[0,0,6,0,0],[0,0,2,0,1]],"euler":0},"5":{"betti":[1,0,3,8,3,0,1],"e2":[[1,0,5,0,1],[2,0,10,0,2],[1,0,5,0,1]],"e3":[[1,0,3,0,0],[0,0,8,0,0],[0,0,3,0,1]],"euler":0},"6":{"betti":[1,0,4,10,4,0,1],"e2":[[1,0,6,0,1],[2,0,12,0,2],[1,0,6,0,1]],"e3":[[1,0,4,0,0],[0,0,10,0,0],[0,0,4,0,1]],"euler":0},"7":{"betti":[1,0,5,12,5,0,1],"e2":[[1,0,7,0,1],[2,0,14,0,2],[1,0,7,0,1]],"e3":[[1,0,5,0,0],[0,0,12,0,0],[0,0,5,0,1]],"euler":0},"8":{"betti":[1,0,6,14,6,0,1],"e2":[[1,0,8,0,1],[2,0,16,0,2],[1,0,8,0,1]],"e3":[[1,0,6,0,0],[0,0,14,0,0],[0,0,6,0,1]],"euler":0},"9":{"betti":[1,0,7,16,7,0,1],"e2":[[1,0,9,0,1],[2,0,18,0,2],[1,0,9,0,1]],"e3":[[1,0,7,0,0],[0,0,16,0,0],[0,0,7,0,1]],"euler":0}},"two_point":{"E1E2_defect":["3","-8/7","-8/7"],"QFF":28,"alpha_pairings":[1,0],"beta_pairings":[0,1],"curve_values":[2,2,2],"defect_at_omega1":["-3","1","1"],"lambda":["1","0"],"scale":"2","skt_total":3}})json";

}  // namespace cytforge::detail
