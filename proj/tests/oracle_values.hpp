#pragma once

// Generated by tests/oracles/make_oracles.py (mpmath); do not edit.

namespace oracle {

// ln G(1/2)
inline constexpr const char* kLogBarnesG_half = "-5.054330544896953827976849898083449517213991014666199327898275603418493e-1";
// ln G(3/2)
inline constexpr const char* kLogBarnesG_3_2 = "6.693188843500470427402868586818440410224830499103585296698397539421963e-2";
// ln G(1/10)
inline constexpr const char* kLogBarnesG_0_1 = "-2.218184611604620920557127738106375028546595688820482726506515767181493";
// ln G(21/4)
inline constexpr const char* kLogBarnesG_5_25 = "3.139875355533487640516942598814024535319328737007749022117023188607475";
// ln G(37/3)
inline constexpr const char* kLogBarnesG_37_3 = "6.962892420864904816887025890681912948292595378828702706897072106061266e+1";
// ln G(501/2)
inline constexpr const char* kLogBarnesG_250_5 = "1.253348109556164518689572259893025846904282428859690954517589804589761e+5";
// ln Gamma(1/3)
inline constexpr const char* kLogGamma_1_3 = "9.854206469277670691871740369779613917355564963858858542347570100894041e-1";
// ln Gamma(77.7)
inline constexpr const char* kLogGamma_77_7 = "2.592604368975979727050385556559959592771805949014211984319027326060773e+2";
// zeta'(-1)
inline constexpr const char* kZetaPrimeMinusOne = "-1.654211437004509292139196602427806427640363803352017836665223063573597e-1";
// mu_0 of (1-x)^(1/2)(1+x)^(-1/3)
inline constexpr const char* kMoment_half_mthird_0 = "2.489084824331854100664901644667503363778011916037410010844155195100434";
// mu_7 of (1-x)^(1/2)(1+x)^(-1/3)
inline constexpr const char* kMoment_half_mthird_7 = "-4.452776075191741544828913177951210746579434228586371174400504821672407e-1";
// ln D_6 of (1-x)^(1/2)(1+x)^(-1/3)
inline constexpr const char* kLogDet_half_mthird_6 = "-1.485404699411065108063788786332997326141533350847098358343868592292465e+1";
// ln D_8 of (1-x)^(3/2)(1+x)
inline constexpr const char* kLogDet_3half_1_8 = "-4.071686001765510536221849095209265992620183763310816894317378607476876e+1";
// ln D_5 of (1-x)^(-9/10)(1+x)^(-7/10)
inline constexpr const char* kLogDet_m9_m7_5 = "-1.569383421228768415451925677854553619915150015551022083950327199167511";
// mu_3 of (1-x)^(1/2) e^x
inline constexpr const char* kPerturbedMoment_half_0_exp_3 = "6.191461395442944744823291513409590788601236219388318892531753599032742e-2";
// ln D_5 of (1-x)^(1/2) e^x
inline constexpr const char* kLogDet_half_0_exp_5 = "-1.032474085559734404199642838038963834539219810834014786656510698350193e+1";
// ln D_4 of (1-x)(1+x)^(1/2) exp(T_2(x)/4)
inline constexpr const char* kLogDet_1_half_expT2q_4 = "-7.372337124243938716672806841341140119782264856272525492219476970640812";
// P int sqrt(1-y^2) T_2'(y)/(y-x) dy at x = -0.7
inline constexpr const char* kPvT2_0 = "1.256637061435917295385057353311801153678867759750042328389970199164740e-1";
// P int sqrt(1-y^2) T_2'(y)/(y-x) dy at x = -0.2
inline constexpr const char* kPvT2_1 = "5.780530482605219558771263825234285306922791694850194710593898387344886";
// P int sqrt(1-y^2) T_2'(y)/(y-x) dy at x = 0.1
inline constexpr const char* kPvT2_2 = "6.157521601035994747386781031227825653026452022775207409110891625149655";
// P int sqrt(1-y^2) T_2'(y)/(y-x) dy at x = 0.4
inline constexpr const char* kPvT2_3 = "4.272566008882118804309195001260123922508150383150143916525924191522754";
// P int sqrt(1-y^2) T_2'(y)/(y-x) dy at x = 0.9
inline constexpr const char* kPvT2_4 = "-3.895574890451343615693677795266583576404490055225131218008930642567221";
// P int sqrt(1-y^2)/(y-x) dy at x = 0.3
inline constexpr const char* kPvLinear_0_3 = "-9.424777960769379715387930149838508652591508198125317462924834056626867e-1";

}  // namespace oracle
