// Nested Gauss-Patterson nodes and weights on [-1,1], unit weight function.
// Levels 1..9 with 2^level - 1 nodes; level L nodes are a subset of level
// L+1. Values computed offline by iterated Stieltjes extension at 400-digit
// precision and validated for symmetry, positivity, nestedness, and the
// published degree of exactness 3*2^(level-1) - 1.

namespace epf {
namespace patterson_table {

extern const int max_level;
const int max_level = 9;

namespace {
const double nodes_1[1] = {
    0.00000000000000000e+00
};
const double weights_1[1] = {
    2.00000000000000000e+00
};
}  // namespace

namespace {
const double nodes_2[3] = {
    -7.74596669241483404e-01, 0.00000000000000000e+00, 7.74596669241483404e-01
};
const double weights_2[3] = {
    5.55555555555555580e-01, 8.88888888888888840e-01, 5.55555555555555580e-01
};
}  // namespace

namespace {
const double nodes_3[7] = {
    -9.60491268708020263e-01, -7.74596669241483404e-01, -4.34243749346802543e-01,
    0.00000000000000000e+00, 4.34243749346802543e-01, 7.74596669241483404e-01,
    9.60491268708020263e-01
};
const double weights_3[7] = {
    1.04656226026467264e-01, 2.68488089868333446e-01, 4.01397414775962247e-01,
    4.50916538658474142e-01, 4.01397414775962247e-01, 2.68488089868333446e-01,
    1.04656226026467264e-01
};
}  // namespace

namespace {
const double nodes_4[15] = {
    -9.93831963212755021e-01, -9.60491268708020263e-01, -8.88459232872257032e-01,
    -7.74596669241483404e-01, -6.21102946737226436e-01, -4.34243749346802543e-01,
    -2.23386686428966891e-01, 0.00000000000000000e+00, 2.23386686428966891e-01,
    4.34243749346802543e-01, 6.21102946737226436e-01, 7.74596669241483404e-01,
    8.88459232872257032e-01, 9.60491268708020263e-01, 9.93831963212755021e-01
};
const double weights_4[15] = {
    1.70017196299402616e-02, 5.16032829970797385e-02, 9.29271953151245417e-02,
    1.34415255243784226e-01, 1.71511909136391388e-01, 2.00628529376989023e-01,
    2.19156858401587495e-01, 2.25510499798206698e-01, 2.19156858401587495e-01,
    2.00628529376989023e-01, 1.71511909136391388e-01, 1.34415255243784226e-01,
    9.29271953151245417e-02, 5.16032829970797385e-02, 1.70017196299402616e-02
};
}  // namespace

namespace {
const double nodes_5[31] = {
    -9.99098124967667589e-01, -9.93831963212755021e-01, -9.81531149553740101e-01,
    -9.60491268708020263e-01, -9.29654857429740078e-01, -8.88459232872257032e-01,
    -8.36725938168868755e-01, -7.74596669241483404e-01, -7.02496206491527109e-01,
    -6.21102946737226436e-01, -5.31319743644375619e-01, -4.34243749346802543e-01,
    -3.31135393257976807e-01, -2.23386686428966891e-01, -1.12488943133186622e-01,
    0.00000000000000000e+00, 1.12488943133186622e-01, 2.23386686428966891e-01,
    3.31135393257976807e-01, 4.34243749346802543e-01, 5.31319743644375619e-01,
    6.21102946737226436e-01, 7.02496206491527109e-01, 7.74596669241483404e-01,
    8.36725938168868755e-01, 8.88459232872257032e-01, 9.29654857429740078e-01,
    9.60491268708020263e-01, 9.81531149553740101e-01, 9.93831963212755021e-01,
    9.99098124967667589e-01
};
const double weights_5[31] = {
    2.54478079156187460e-03, 8.43456573932110584e-03, 1.64460498543878113e-02,
    2.58075980961766545e-02, 3.59571033071293192e-02, 4.64628932617579885e-02,
    5.69795094941233579e-02, 6.72077542959906987e-02, 7.68796204990035287e-02,
    8.57559200499903446e-02, 9.36271099812644725e-02, 1.00314278611795579e-01,
    1.05669893580234805e-01, 1.09578421055924635e-01, 1.11956873020953460e-01,
    1.12755256720768693e-01, 1.11956873020953460e-01, 1.09578421055924635e-01,
    1.05669893580234805e-01, 1.00314278611795579e-01, 9.36271099812644725e-02,
    8.57559200499903446e-02, 7.68796204990035287e-02, 6.72077542959906987e-02,
    5.69795094941233579e-02, 4.64628932617579885e-02, 3.59571033071293192e-02,
    2.58075980961766545e-02, 1.64460498543878113e-02, 8.43456573932110584e-03,
    2.54478079156187460e-03
};
}  // namespace

namespace {
const double nodes_6[63] = {
    -9.99872888120357572e-01, -9.99098124967667589e-01, -9.97206259372221959e-01,
    -9.93831963212755021e-01, -9.88684757547429460e-01, -9.81531149553740101e-01,
    -9.72182874748581782e-01, -9.60491268708020263e-01, -9.46342858373402929e-01,
    -9.29654857429740078e-01, -9.10371156957004324e-01, -8.88459232872257032e-01,
    -8.63907938193690494e-01, -8.36725938168868755e-01, -8.06940531950217643e-01,
    -7.74596669241483404e-01, -7.39756044352694708e-01, -7.02496206491527109e-01,
    -6.62909660024780578e-01, -6.21102946737226436e-01, -5.77195710052045841e-01,
    -5.31319743644375619e-01, -4.83618026945841051e-01, -4.34243749346802543e-01,
    -3.83359324198730367e-01, -3.31135393257976807e-01, -2.77749822021824300e-01,
    -2.23386686428966891e-01, -1.68235251552207477e-01, -1.12488943133186622e-01,
    -5.63443130465927922e-02, 0.00000000000000000e+00, 5.63443130465927922e-02,
    1.12488943133186622e-01, 1.68235251552207477e-01, 2.23386686428966891e-01,
    2.77749822021824300e-01, 3.31135393257976807e-01, 3.83359324198730367e-01,
    4.34243749346802543e-01, 4.83618026945841051e-01, 5.31319743644375619e-01,
    5.77195710052045841e-01, 6.21102946737226436e-01, 6.62909660024780578e-01,
    7.02496206491527109e-01, 7.39756044352694708e-01, 7.74596669241483404e-01,
    8.06940531950217643e-01, 8.36725938168868755e-01, 8.63907938193690494e-01,
    8.88459232872257032e-01, 9.10371156957004324e-01, 9.29654857429740078e-01,
    9.46342858373402929e-01, 9.60491268708020263e-01, 9.72182874748581782e-01,
    9.81531149553740101e-01, 9.88684757547429460e-01, 9.93831963212755021e-01,
    9.97206259372221959e-01, 9.99098124967667589e-01, 9.99872888120357572e-01
};
const double weights_6[63] = {
    3.63221481845530650e-04, 1.26515655623006800e-03, 2.57904979468568827e-03,
    4.21763044155885457e-03, 6.11550682211724640e-03, 8.22300795723593034e-03,
    1.04982469096213220e-02, 1.29038001003512655e-02, 1.54067504665594979e-02,
    1.79785515681282690e-02, 2.05942339159127102e-02, 2.32314466399102700e-02,
    2.58696793272147479e-02, 2.84897547458335502e-02, 3.10735511116879658e-02,
    3.36038771482077281e-02, 3.60644327807825710e-02, 3.84398102494555305e-02,
    4.07155101169443187e-02, 4.28779600250077317e-02, 4.49145316536321976e-02,
    4.68135549906280105e-02, 4.85643304066731979e-02, 5.01571393058995382e-02,
    5.15832539520484565e-02, 5.28349467901165215e-02, 5.39054993352660605e-02,
    5.47892105279628658e-02, 5.54814043565593634e-02, 5.59784365104763204e-02,
    5.62776998312543020e-02, 5.63776283603847142e-02, 5.62776998312543020e-02,
    5.59784365104763204e-02, 5.54814043565593634e-02, 5.47892105279628658e-02,
    5.39054993352660605e-02, 5.28349467901165215e-02, 5.15832539520484565e-02,
    5.01571393058995382e-02, 4.85643304066731979e-02, 4.68135549906280105e-02,
    4.49145316536321976e-02, 4.28779600250077317e-02, 4.07155101169443187e-02,
    3.84398102494555305e-02, 3.60644327807825710e-02, 3.36038771482077281e-02,
    3.10735511116879658e-02, 2.84897547458335502e-02, 2.58696793272147479e-02,
    2.32314466399102700e-02, 2.05942339159127102e-02, 1.79785515681282690e-02,
    1.54067504665594979e-02, 1.29038001003512655e-02, 1.04982469096213220e-02,
    8.22300795723593034e-03, 6.11550682211724640e-03, 4.21763044155885457e-03,
    2.57904979468568827e-03, 1.26515655623006800e-03, 3.63221481845530650e-04
};
}  // namespace

namespace {
const double nodes_7[127] = {
    -9.99982430354891649e-01, -9.99872888120357572e-01, -9.99598799671910676e-01,
    -9.99098124967667589e-01, -9.98316635318407419e-01, -9.97206259372221959e-01,
    -9.95724104698407220e-01, -9.93831963212755021e-01, -9.91495721178106137e-01,
    -9.88684757547429460e-01, -9.85371499598520328e-01, -9.81531149553740101e-01,
    -9.77141514639705666e-01, -9.72182874748581782e-01, -9.66637851558416528e-01,
    -9.60491268708020263e-01, -9.53730006425761112e-01, -9.46342858373402929e-01,
    -9.38320397779592863e-01, -9.29654857429740078e-01, -9.20340025470012368e-01,
    -9.10371156957004324e-01, -8.99744899776940055e-01, -8.88459232872257032e-01,
    -8.76513414484705322e-01, -8.63907938193690494e-01, -8.50644494768350246e-01,
    -8.36725938168868755e-01, -8.22156254364980410e-01, -8.06940531950217643e-01,
    -7.91084933799848344e-01, -7.74596669241483404e-01, -7.57483966380513629e-01,
    -7.39756044352694708e-01, -7.21423085370098915e-01, -7.02496206491527109e-01,
    -6.82987431091079178e-01, -6.62909660024780578e-01, -6.42276642509759466e-01,
    -6.21102946737226436e-01, -5.99403930242242922e-01, -5.77195710052045841e-01,
    -5.54495132631932508e-01, -5.31319743644375619e-01, -5.07687757533716644e-01,
    -4.83618026945841051e-01, -4.59130011989832332e-01, -4.34243749346802543e-01,
    -4.08979821229888685e-01, -3.83359324198730367e-01, -3.57403837831532178e-01,
    -3.31135393257976807e-01, -3.04576441556714039e-01, -2.77749822021824300e-01,
    -2.50678730303483199e-01, -2.23386686428966891e-01, -1.95897502711100152e-01,
    -1.68235251552207477e-01, -1.40424233152560168e-01, -1.12488943133186622e-01,
    -8.44540400837108796e-02, -5.63443130465927922e-02, -2.81846489497456949e-02,
    0.00000000000000000e+00, 2.81846489497456949e-02, 5.63443130465927922e-02,
    8.44540400837108796e-02, 1.12488943133186622e-01, 1.40424233152560168e-01,
    1.68235251552207477e-01, 1.95897502711100152e-01, 2.23386686428966891e-01,
    2.50678730303483199e-01, 2.77749822021824300e-01, 3.04576441556714039e-01,
    3.31135393257976807e-01, 3.57403837831532178e-01, 3.83359324198730367e-01,
    4.08979821229888685e-01, 4.34243749346802543e-01, 4.59130011989832332e-01,
    4.83618026945841051e-01, 5.07687757533716644e-01, 5.31319743644375619e-01,
    5.54495132631932508e-01, 5.77195710052045841e-01, 5.99403930242242922e-01,
    6.21102946737226436e-01, 6.42276642509759466e-01, 6.62909660024780578e-01,
    6.82987431091079178e-01, 7.02496206491527109e-01, 7.21423085370098915e-01,
    7.39756044352694708e-01, 7.57483966380513629e-01, 7.74596669241483404e-01,
    7.91084933799848344e-01, 8.06940531950217643e-01, 8.22156254364980410e-01,
    8.36725938168868755e-01, 8.50644494768350246e-01, 8.63907938193690494e-01,
    8.76513414484705322e-01, 8.88459232872257032e-01, 8.99744899776940055e-01,
    9.10371156957004324e-01, 9.20340025470012368e-01, 9.29654857429740078e-01,
    9.38320397779592863e-01, 9.46342858373402929e-01, 9.53730006425761112e-01,
    9.60491268708020263e-01, 9.66637851558416528e-01, 9.72182874748581782e-01,
    9.77141514639705666e-01, 9.81531149553740101e-01, 9.85371499598520328e-01,
    9.88684757547429460e-01, 9.91495721178106137e-01, 9.93831963212755021e-01,
    9.95724104698407220e-01, 9.97206259372221959e-01, 9.98316635318407419e-01,
    9.99098124967667589e-01, 9.99598799671910676e-01, 9.99872888120357572e-01,
    9.99982430354891649e-01
};
const double weights_7[127] = {
    5.05360952078625207e-05, 1.80739564445388370e-04, 3.77746646326984647e-04,
    6.32607319362633543e-04, 9.38369848542381529e-04, 1.28952408261041743e-03,
    1.68114286542147000e-03, 2.10881524572663305e-03, 2.56876494379402022e-03,
    3.05775341017553099e-03, 3.57289278351729947e-03, 4.11150397865469273e-03,
    4.67105037211432150e-03, 5.24912345480885948e-03, 5.84344987583563982e-03,
    6.45190005017573683e-03, 7.07248999543355541e-03, 7.70337523327974203e-03,
    8.34283875396815700e-03, 8.98927578406413623e-03, 9.64117772970253702e-03,
    1.02971169579563551e-02, 1.09557333878379012e-02, 1.16157233199551350e-02,
    1.22758305600827698e-02, 1.29348396636073740e-02, 1.35915710097655462e-02,
    1.42448773729167751e-02, 1.48936416648151812e-02, 1.55367755558439829e-02,
    1.61732187295777208e-02, 1.68019385741038640e-02, 1.74219301594641732e-02,
    1.80322163903912855e-02, 1.86318482561387902e-02, 1.92199051247277652e-02,
    1.97954950480974980e-02, 2.03577550584721594e-02, 2.09058514458120223e-02,
    2.14389800125038658e-02, 2.19563663053178246e-02, 2.24572658268160988e-02,
    2.29409642293877496e-02, 2.34067774953140052e-02, 2.38540521060385396e-02,
    2.42821652033365989e-02, 2.46905247444876783e-02, 2.50785696529497691e-02,
    2.54457699654647672e-02, 2.57916269760242282e-02, 2.61156733767060993e-02,
    2.64174733950582608e-02, 2.66966229274503593e-02, 2.69527496676330303e-02,
    2.71855132296247928e-02, 2.73946052639814329e-02, 2.75797495664818725e-02,
    2.77407021782796817e-02, 2.78772514766137021e-02, 2.79892182552381602e-02,
    2.80764557938172482e-02, 2.81388499156271510e-02, 2.81763190330166016e-02,
    2.81888141801923571e-02, 2.81763190330166016e-02, 2.81388499156271510e-02,
    2.80764557938172482e-02, 2.79892182552381602e-02, 2.78772514766137021e-02,
    2.77407021782796817e-02, 2.75797495664818725e-02, 2.73946052639814329e-02,
    2.71855132296247928e-02, 2.69527496676330303e-02, 2.66966229274503593e-02,
    2.64174733950582608e-02, 2.61156733767060993e-02, 2.57916269760242282e-02,
    2.54457699654647672e-02, 2.50785696529497691e-02, 2.46905247444876783e-02,
    2.42821652033365989e-02, 2.38540521060385396e-02, 2.34067774953140052e-02,
    2.29409642293877496e-02, 2.24572658268160988e-02, 2.19563663053178246e-02,
    2.14389800125038658e-02, 2.09058514458120223e-02, 2.03577550584721594e-02,
    1.97954950480974980e-02, 1.92199051247277652e-02, 1.86318482561387902e-02,
    1.80322163903912855e-02, 1.74219301594641732e-02, 1.68019385741038640e-02,
    1.61732187295777208e-02, 1.55367755558439829e-02, 1.48936416648151812e-02,
    1.42448773729167751e-02, 1.35915710097655462e-02, 1.29348396636073740e-02,
    1.22758305600827698e-02, 1.16157233199551350e-02, 1.09557333878379012e-02,
    1.02971169579563551e-02, 9.64117772970253702e-03, 8.98927578406413623e-03,
    8.34283875396815700e-03, 7.70337523327974203e-03, 7.07248999543355541e-03,
    6.45190005017573683e-03, 5.84344987583563982e-03, 5.24912345480885948e-03,
    4.67105037211432150e-03, 4.11150397865469273e-03, 3.57289278351729947e-03,
    3.05775341017553099e-03, 2.56876494379402022e-03, 2.10881524572663305e-03,
    1.68114286542147000e-03, 1.28952408261041743e-03, 9.38369848542381529e-04,
    6.32607319362633543e-04, 3.77746646326984647e-04, 1.80739564445388370e-04,
    5.05360952078625207e-05
};
}  // namespace

namespace {
const double nodes_8[255] = {
    -9.99997596379748499e-01, -9.99982430354891649e-01, -9.99943996207054431e-01,
    -9.99872888120357572e-01, -9.99760490924432088e-01, -9.99598799671910676e-01,
    -9.99380338025023574e-01, -9.99098124967667589e-01, -9.98745614468095066e-01,
    -9.98316635318407419e-01, -9.97805354495957308e-01, -9.97206259372221959e-01,
    -9.96514145914890292e-01, -9.95724104698407220e-01, -9.94831502800621048e-01,
    -9.93831963212755021e-01, -9.92721344282788576e-01, -9.91495721178106137e-01,
    -9.90151370400770170e-01, -9.88684757547429460e-01, -9.87092527954034016e-01,
    -9.85371499598520328e-01, -9.83518657578632771e-01, -9.81531149553740101e-01,
    -9.79406281670862633e-01, -9.77141514639705666e-01, -9.74734459752402693e-01,
    -9.72182874748581782e-01, -9.69484659502459212e-01, -9.66637851558416528e-01,
    -9.63640621569812117e-01, -9.60491268708020263e-01, -9.57188216109860934e-01,
    -9.53730006425761112e-01, -9.50115297521294866e-01, -9.46342858373402929e-01,
    -9.42411565191083045e-01, -9.38320397779592863e-01, -9.34068436157725834e-01,
    -9.29654857429740078e-01, -9.25078932907075657e-01, -9.20340025470012368e-01,
    -9.15437587155765065e-01, -9.10371156957004324e-01, -9.05140358813261603e-01,
    -8.99744899776940055e-01, -8.94184568335559038e-01, -8.88459232872257032e-01,
    -8.82568840247341946e-01, -8.76513414484705322e-01, -8.70293055548113870e-01,
    -8.63907938193690494e-01, -8.57358310886232156e-01, -8.50644494768350246e-01,
    -8.43766882672708607e-01, -8.36725938168868755e-01, -8.29522194637401400e-01,
    -8.22156254364980410e-01, -8.14628787655137465e-01, -8.06940531950217643e-01,
    -7.99092290960841445e-01, -7.91084933799848344e-01, -7.82919394118283041e-01,
    -7.74596669241483404e-01, -7.66117819303760106e-01, -7.57483966380513629e-01,
    -7.48696293616936570e-01, -7.39756044352694708e-01, -7.30664521242181286e-01,
    -7.21423085370098915e-01, -7.12033155362251979e-01, -7.02496206491527109e-01,
    -6.92813769779114685e-01, -6.82987431091079178e-01, -6.73018830230418530e-01,
    -6.62909660024780578e-01, -6.52661665410017466e-01, -6.42276642509759466e-01,
    -6.31756437711194274e-01, -6.21102946737226436e-01, -6.10318113715186406e-01,
    -5.99403930242242922e-01, -5.88362434447662563e-01, -5.77195710052045841e-01,
    -5.65905885423654387e-01, -5.54495132631932508e-01, -5.42965666498311461e-01,
    -5.31319743644375619e-01, -5.19559661537457029e-01, -5.07687757533716644e-01,
    -4.95706407918761471e-01, -4.83618026945841051e-01, -4.71425065871658888e-01,
    -4.59130011989832332e-01, -4.46735387662028471e-01, -4.34243749346802543e-01,
    -4.21657686626163319e-01, -4.08979821229888685e-01, -3.96212806057615941e-01,
    -3.83359324198730367e-01, -3.70422087950078249e-01, -3.57403837831532178e-01,
    -3.44307341599438044e-01, -3.31135393257976807e-01, -3.17890812068476691e-01,
    -3.04576441556714039e-01, -2.91195148518246683e-01, -2.77749822021824300e-01,
    -2.64243372410926769e-01, -2.50678730303483199e-01, -2.37058845589829731e-01,
    -2.23386686428966891e-01, -2.09665238243181201e-01, -1.95897502711100152e-01,
    -1.82086496759252203e-01, -1.68235251552207477e-01, -1.54346811481378104e-01,
    -1.40424233152560168e-01, -1.26470584372301964e-01, -1.12488943133186622e-01,
    -9.84823965981192068e-02, -8.44540400837108796e-02, -7.04069760428551739e-02,
    -5.63443130465927922e-02, -4.22691647653636038e-02, -2.81846489497456949e-02,
    -1.40938864107824618e-02, 0.00000000000000000e+00, 1.40938864107824618e-02,
    2.81846489497456949e-02, 4.22691647653636038e-02, 5.63443130465927922e-02,
    7.04069760428551739e-02, 8.44540400837108796e-02, 9.84823965981192068e-02,
    1.12488943133186622e-01, 1.26470584372301964e-01, 1.40424233152560168e-01,
    1.54346811481378104e-01, 1.68235251552207477e-01, 1.82086496759252203e-01,
    1.95897502711100152e-01, 2.09665238243181201e-01, 2.23386686428966891e-01,
    2.37058845589829731e-01, 2.50678730303483199e-01, 2.64243372410926769e-01,
    2.77749822021824300e-01, 2.91195148518246683e-01, 3.04576441556714039e-01,
    3.17890812068476691e-01, 3.31135393257976807e-01, 3.44307341599438044e-01,
    3.57403837831532178e-01, 3.70422087950078249e-01, 3.83359324198730367e-01,
    3.96212806057615941e-01, 4.08979821229888685e-01, 4.21657686626163319e-01,
    4.34243749346802543e-01, 4.46735387662028471e-01, 4.59130011989832332e-01,
    4.71425065871658888e-01, 4.83618026945841051e-01, 4.95706407918761471e-01,
    5.07687757533716644e-01, 5.19559661537457029e-01, 5.31319743644375619e-01,
    5.42965666498311461e-01, 5.54495132631932508e-01, 5.65905885423654387e-01,
    5.77195710052045841e-01, 5.88362434447662563e-01, 5.99403930242242922e-01,
    6.10318113715186406e-01, 6.21102946737226436e-01, 6.31756437711194274e-01,
    6.42276642509759466e-01, 6.52661665410017466e-01, 6.62909660024780578e-01,
    6.73018830230418530e-01, 6.82987431091079178e-01, 6.92813769779114685e-01,
    7.02496206491527109e-01, 7.12033155362251979e-01, 7.21423085370098915e-01,
    7.30664521242181286e-01, 7.39756044352694708e-01, 7.48696293616936570e-01,
    7.57483966380513629e-01, 7.66117819303760106e-01, 7.74596669241483404e-01,
    7.82919394118283041e-01, 7.91084933799848344e-01, 7.99092290960841445e-01,
    8.06940531950217643e-01, 8.14628787655137465e-01, 8.22156254364980410e-01,
    8.29522194637401400e-01, 8.36725938168868755e-01, 8.43766882672708607e-01,
    8.50644494768350246e-01, 8.57358310886232156e-01, 8.63907938193690494e-01,
    8.70293055548113870e-01, 8.76513414484705322e-01, 8.82568840247341946e-01,
    8.88459232872257032e-01, 8.94184568335559038e-01, 8.99744899776940055e-01,
    9.05140358813261603e-01, 9.10371156957004324e-01, 9.15437587155765065e-01,
    9.20340025470012368e-01, 9.25078932907075657e-01, 9.29654857429740078e-01,
    9.34068436157725834e-01, 9.38320397779592863e-01, 9.42411565191083045e-01,
    9.46342858373402929e-01, 9.50115297521294866e-01, 9.53730006425761112e-01,
    9.57188216109860934e-01, 9.60491268708020263e-01, 9.63640621569812117e-01,
    9.66637851558416528e-01, 9.69484659502459212e-01, 9.72182874748581782e-01,
    9.74734459752402693e-01, 9.77141514639705666e-01, 9.79406281670862633e-01,
    9.81531149553740101e-01, 9.83518657578632771e-01, 9.85371499598520328e-01,
    9.87092527954034016e-01, 9.88684757547429460e-01, 9.90151370400770170e-01,
    9.91495721178106137e-01, 9.92721344282788576e-01, 9.93831963212755021e-01,
    9.94831502800621048e-01, 9.95724104698407220e-01, 9.96514145914890292e-01,
    9.97206259372221959e-01, 9.97805354495957308e-01, 9.98316635318407419e-01,
    9.98745614468095066e-01, 9.99098124967667589e-01, 9.99380338025023574e-01,
    9.99598799671910676e-01, 9.99760490924432088e-01, 9.99872888120357572e-01,
    9.99943996207054431e-01, 9.99982430354891649e-01, 9.99997596379748499e-01
};
const double weights_8[255] = {
    6.93793643241082635e-06, 2.51578703842806604e-05, 5.32752936697806123e-05,
    9.03727346587511460e-05, 1.35754910949228730e-04, 1.88873264506504907e-04,
    2.49212400482997309e-04, 3.16303660822264460e-04, 3.89745284473282268e-04,
    4.69184924247850385e-04, 5.54295314930374752e-04, 6.44762041305724795e-04,
    7.40282804244503335e-04, 8.40571432710722423e-04, 9.45361516858525411e-04,
    1.05440762286331674e-03, 1.16748411742995930e-03, 1.28438247189701011e-03,
    1.40490799565514465e-03, 1.52887670508776549e-03, 1.65611272815445270e-03,
    1.78644639175864974e-03, 1.91971297101387246e-03, 2.05575198932734637e-03,
    2.19440692536383881e-03, 2.33552518605716075e-03, 2.47895822665756800e-03,
    2.62456172740442974e-03, 2.77219576459345092e-03, 2.92172493791781991e-03,
    3.07301843470257846e-03, 3.22595002508786841e-03, 3.38039799108692026e-03,
    3.53624499771677770e-03, 3.69337791702565102e-03, 3.85168761663987102e-03,
    4.01106872407502348e-03, 4.17141937698407850e-03, 4.33264096809298296e-03,
    4.49463789203206811e-03, 4.65731729975685498e-03, 4.82058886485126851e-03,
    4.98436456476553883e-03, 5.14855847897817756e-03, 5.31308660518705657e-03,
    5.47786669391895058e-03, 5.64281810138444421e-03, 5.80786165997756749e-03,
    5.97291956550816561e-03, 6.13791528004138491e-03, 6.30277344908575839e-03,
    6.46741983180368699e-03, 6.63178124290188763e-03, 6.79578550488277311e-03,
    6.95936140939042332e-03, 7.12243868645838756e-03, 7.28494798055380737e-03,
    7.44682083240759060e-03, 7.60798966571905617e-03, 7.76838777792199144e-03,
    7.92794933429484885e-03, 8.08660936478886039e-03, 8.24430376303286749e-03,
    8.40096928705193202e-03, 8.55654356130768935e-03, 8.71096507973208659e-03,
    8.86417320948249508e-03, 9.01610819519564274e-03, 9.16671116356078917e-03,
    9.31592412806939510e-03, 9.46368999383006594e-03, 9.60995256236388262e-03,
    9.75465653631741106e-03, 9.89774752404874898e-03, 1.00391720440568405e-02,
    1.01788775292360797e-02, 1.03168123309476216e-02, 1.04529257229060112e-02,
    1.05871679048851978e-02, 1.07194900062519329e-02, 1.08498440893373144e-02,
    1.09781831526589123e-02, 1.11044611340069266e-02, 1.12286329134080494e-02,
    1.13506543159805958e-02, 1.14704821146938748e-02, 1.15880740330439533e-02,
    1.17033887476570026e-02, 1.18163858908302364e-02, 1.19270260530192698e-02,
    1.20352707852795626e-02, 1.21410826016682995e-02, 1.22444249816119864e-02,
    1.23452623722438391e-02, 1.24435601907140359e-02, 1.25392848264748846e-02,
    1.26324036435420794e-02, 1.27228849827323836e-02, 1.28106981638773619e-02,
    1.28958134880121141e-02, 1.29782022395373998e-02, 1.30578366883530497e-02,
    1.31346900919601522e-02, 1.32087366975291304e-02, 1.32799517439305299e-02,
    1.33483114637251796e-02, 1.34137930851100980e-02, 1.34763748338165151e-02,
    1.35360359349562132e-02, 1.35927566148123964e-02, 1.36465181025712916e-02,
    1.36973026319907164e-02, 1.37450934430018972e-02, 1.37898747832409362e-02,
    1.38316319095064290e-02, 1.38703510891398409e-02, 1.39060196013254620e-02,
    1.39386257383068510e-02, 1.39681588065169379e-02, 1.39946091276190801e-02,
    1.40179680394566086e-02, 1.40382278969086241e-02, 1.40553820726499641e-02,
    1.40694249578135755e-02, 1.40803519625536614e-02, 1.40881595165083008e-02,
    1.40928450691604080e-02, 1.40944070900961786e-02, 1.40928450691604080e-02,
    1.40881595165083008e-02, 1.40803519625536614e-02, 1.40694249578135755e-02,
    1.40553820726499641e-02, 1.40382278969086241e-02, 1.40179680394566086e-02,
    1.39946091276190801e-02, 1.39681588065169379e-02, 1.39386257383068510e-02,
    1.39060196013254620e-02, 1.38703510891398409e-02, 1.38316319095064290e-02,
    1.37898747832409362e-02, 1.37450934430018972e-02, 1.36973026319907164e-02,
    1.36465181025712916e-02, 1.35927566148123964e-02, 1.35360359349562132e-02,
    1.34763748338165151e-02, 1.34137930851100980e-02, 1.33483114637251796e-02,
    1.32799517439305299e-02, 1.32087366975291304e-02, 1.31346900919601522e-02,
    1.30578366883530497e-02, 1.29782022395373998e-02, 1.28958134880121141e-02,
    1.28106981638773619e-02, 1.27228849827323836e-02, 1.26324036435420794e-02,
    1.25392848264748846e-02, 1.24435601907140359e-02, 1.23452623722438391e-02,
    1.22444249816119864e-02, 1.21410826016682995e-02, 1.20352707852795626e-02,
    1.19270260530192698e-02, 1.18163858908302364e-02, 1.17033887476570026e-02,
    1.15880740330439533e-02, 1.14704821146938748e-02, 1.13506543159805958e-02,
    1.12286329134080494e-02, 1.11044611340069266e-02, 1.09781831526589123e-02,
    1.08498440893373144e-02, 1.07194900062519329e-02, 1.05871679048851978e-02,
    1.04529257229060112e-02, 1.03168123309476216e-02, 1.01788775292360797e-02,
    1.00391720440568405e-02, 9.89774752404874898e-03, 9.75465653631741106e-03,
    9.60995256236388262e-03, 9.46368999383006594e-03, 9.31592412806939510e-03,
    9.16671116356078917e-03, 9.01610819519564274e-03, 8.86417320948249508e-03,
    8.71096507973208659e-03, 8.55654356130768935e-03, 8.40096928705193202e-03,
    8.24430376303286749e-03, 8.08660936478886039e-03, 7.92794933429484885e-03,
    7.76838777792199144e-03, 7.60798966571905617e-03, 7.44682083240759060e-03,
    7.28494798055380737e-03, 7.12243868645838756e-03, 6.95936140939042332e-03,
    6.79578550488277311e-03, 6.63178124290188763e-03, 6.46741983180368699e-03,
    6.30277344908575839e-03, 6.13791528004138491e-03, 5.97291956550816561e-03,
    5.80786165997756749e-03, 5.64281810138444421e-03, 5.47786669391895058e-03,
    5.31308660518705657e-03, 5.14855847897817756e-03, 4.98436456476553883e-03,
    4.82058886485126851e-03, 4.65731729975685498e-03, 4.49463789203206811e-03,
    4.33264096809298296e-03, 4.17141937698407850e-03, 4.01106872407502348e-03,
    3.85168761663987102e-03, 3.69337791702565102e-03, 3.53624499771677770e-03,
    3.38039799108692026e-03, 3.22595002508786841e-03, 3.07301843470257846e-03,
    2.92172493791781991e-03, 2.77219576459345092e-03, 2.62456172740442974e-03,
    2.47895822665756800e-03, 2.33552518605716075e-03, 2.19440692536383881e-03,
    2.05575198932734637e-03, 1.91971297101387246e-03, 1.78644639175864974e-03,
    1.65611272815445270e-03, 1.52887670508776549e-03, 1.40490799565514465e-03,
    1.28438247189701011e-03, 1.16748411742995930e-03, 1.05440762286331674e-03,
    9.45361516858525411e-04, 8.40571432710722423e-04, 7.40282804244503335e-04,
    6.44762041305724795e-04, 5.54295314930374752e-04, 4.69184924247850385e-04,
    3.89745284473282268e-04, 3.16303660822264460e-04, 2.49212400482997309e-04,
    1.88873264506504907e-04, 1.35754910949228730e-04, 9.03727346587511460e-05,
    5.32752936697806123e-05, 2.51578703842806604e-05, 6.93793643241082635e-06
};
}  // namespace

namespace {
const double nodes_9[511] = {
    -9.99999672956734420e-01, -9.99997596379748499e-01, -9.99992298136257562e-01,
    -9.99982430354891649e-01, -9.99966730098486245e-01, -9.99943996207054431e-01,
    -9.99913081144678251e-01, -9.99872888120357572e-01, -9.99822363679787718e-01,
    -9.99760490924432088e-01, -9.99686286448317696e-01, -9.99598799671910676e-01,
    -9.99497112467187199e-01, -9.99380338025023574e-01, -9.99247618943342464e-01,
    -9.99098124967667589e-01, -9.98931050830810574e-01, -9.98745614468095066e-01,
    -9.98541055697167890e-01, -9.98316635318407419e-01, -9.98071634524930307e-01,
    -9.97805354495957308e-01, -9.97517116063472375e-01, -9.97206259372221959e-01,
    -9.96872143485260209e-01, -9.96514145914890292e-01, -9.96131662079315028e-01,
    -9.95724104698407220e-01, -9.95290903148810302e-01, -9.94831502800621048e-01,
    -9.94345364356723382e-01, -9.93831963212755021e-01, -9.93290788851684980e-01,
    -9.92721344282788576e-01, -9.92123145530863115e-01, -9.91495721178106137e-01,
    -9.90838611958294257e-01, -9.90151370400770170e-01, -9.89433560520240785e-01,
    -9.88684757547429460e-01, -9.87904547695124258e-01, -9.87092527954034016e-01,
    -9.86248305913007606e-01, -9.85371499598520328e-01, -9.84461737328814590e-01,
    -9.83518657578632771e-01, -9.82541908851080614e-01, -9.81531149553740101e-01,
    -9.80486047876721334e-01, -9.79406281670862633e-01, -9.78291538324758569e-01,
    -9.77141514639705666e-01, -9.75955916702011761e-01, -9.74734459752402693e-01,
    -9.73476868052506883e-01, -9.72182874748581782e-01, -9.70852221732792398e-01,
    -9.69484659502459212e-01, -9.68079947017759901e-01, -9.66637851558416528e-01,
    -9.65158148579915665e-01, -9.63640621569812117e-01, -9.62085061904651484e-01,
    -9.60491268708020263e-01, -9.58859048710200224e-01, -9.57188216109860934e-01,
    -9.55478592438183671e-01, -9.53730006425761112e-01, -9.51942293872573564e-01,
    -9.50115297521294866e-01, -9.48248866934137347e-01, -9.46342858373402929e-01,
    -9.44397134685866613e-01, -9.42411565191083045e-01, -9.40386025573669682e-01,
    -9.38320397779592863e-01, -9.36214569916450801e-01, -9.34068436157725834e-01,
    -9.31881896650953667e-01, -9.29654857429740078e-01, -9.27387230329536738e-01,
    -9.25078932907075657e-01, -9.22729888363349238e-01, -9.20340025470012368e-01,
    -9.17909278499077552e-01, -9.15437587155765065e-01, -9.12924896514370587e-01,
    -9.10371156957004324e-01, -9.07776324115058930e-01, -9.05140358813261603e-01,
    -9.02463227016165659e-01, -8.99744899776940055e-01, -8.96985353188316625e-01,
    -8.94184568335559038e-01, -8.91342531251319903e-01, -8.88459232872257032e-01,
    -8.85534668997285057e-01, -8.82568840247341946e-01, -8.79561752026556287e-01,
    -8.76513414484705322e-01, -8.73423842480859358e-01, -8.70293055548113870e-01,
    -8.67121077859315248e-01, -8.63907938193690494e-01, -8.60653669904299923e-01,
    -8.57358310886232156e-01, -8.54021903545468586e-01, -8.50644494768350246e-01,
    -8.47226135891580912e-01, -8.43766882672708607e-01, -8.40266795261030430e-01,
    -8.36725938168868755e-01, -8.33144380243172611e-01, -8.29522194637401400e-01,
    -8.25859458783649969e-01, -8.22156254364980410e-01, -8.18412667287925832e-01,
    -8.14628787655137465e-01, -8.10804709738146556e-01, -8.06940531950217643e-01,
    -8.03036356819268660e-01, -7.99092290960841445e-01, -7.95108445051100565e-01,
    -7.91084933799848344e-01, -7.87021875923539449e-01, -7.82919394118283041e-01,
    -7.78777615032822723e-01, -7.74596669241483404e-01, -7.70376691217076859e-01,
    -7.66117819303760106e-01, -7.61820195689839164e-01, -7.57483966380513629e-01,
    -7.53109281170558198e-01, -7.48696293616936570e-01, -7.44245161011347078e-01,
    -7.39756044352694708e-01, -7.35229108319491509e-01, -7.30664521242181286e-01,
    -7.26062455075389579e-01, -7.21423085370098915e-01, -7.16746591245747133e-01,
    -7.12033155362251979e-01, -7.07282963891961103e-01, -7.02496206491527109e-01,
    -6.97673076273711223e-01, -6.92813769779114685e-01, -6.87918486947839303e-01,
    -6.82987431091079178e-01, -6.78020808862644486e-01, -6.73018830230418530e-01,
    -6.67981708447749734e-01, -6.62909660024780578e-01, -6.57802904699713697e-01,
    -6.52661665410017466e-01, -6.47486168263572415e-01, -6.42276642509759466e-01,
    -6.37033320510492440e-01, -6.31756437711194274e-01, -6.26446232611719722e-01,
    -6.21102946737226436e-01, -6.15726824608992640e-01, -6.10318113715186406e-01,
    -6.04877064481584403e-01, -5.99403930242242922e-01, -5.93898967210121920e-01,
    -5.88362434447662563e-01, -5.82794593837318797e-01, -5.77195710052045841e-01,
    -5.71566050525742830e-01, -5.65905885423654387e-01, -5.60215487612728436e-01,
    -5.54495132631932508e-01, -5.48745098662529407e-01, -5.42965666498311461e-01,
    -5.37157119515795145e-01, -5.31319743644375619e-01, -5.25453827336442636e-01,
    -5.19559661537457029e-01, -5.13637539655988573e-01, -5.07687757533716644e-01,
    -5.01710613415391915e-01, -4.95706407918761471e-01, -4.89675444004456173e-01,
    -4.83618026945841051e-01, -4.77534464298829175e-01, -4.71425065871658888e-01,
    -4.65290143694634728e-01, -4.59130011989832332e-01, -4.52944987140767308e-01,
    -4.46735387662028471e-01, -4.40501534168875775e-01, -4.34243749346802543e-01,
    -4.27962357921062742e-01, -4.21657686626163319e-01, -4.15330064175321645e-01,
    -4.08979821229888685e-01, -4.02607290368737103e-01, -3.96212806057615941e-01,
    -3.89796704618470768e-01, -3.83359324198730367e-01, -3.76901004740559320e-01,
    -3.70422087950078249e-01, -3.63922917266549628e-01, -3.57403837831532178e-01,
    -3.50865196458001183e-01, -3.44307341599438044e-01, -3.37730623318886203e-01,
    -3.31135393257976807e-01, -3.24522004605921843e-01, -3.17890812068476691e-01,
    -3.11242171836871806e-01, -3.04576441556714039e-01, -2.97893980296857819e-01,
    -2.91195148518246683e-01, -2.84480308042725560e-01, -2.77749822021824300e-01,
    -2.71004054905512548e-01, -2.64243372410926769e-01, -2.57468141491069780e-01,
    -2.50678730303483199e-01, -2.43875508178893030e-01, -2.37058845589829731e-01,
    -2.30229114119222172e-01, -2.23386686428966891e-01, -2.16531936228472638e-01,
    -2.09665238243181201e-01, -2.02786968183064686e-01, -1.95897502711100152e-01,
    -1.88997219411721873e-01, -1.82086496759252203e-01, -1.75165714086311486e-01,
    -1.68235251552207477e-01, -1.61295490111305256e-01, -1.54346811481378104e-01,
    -1.47389598111939940e-01, -1.40424233152560168e-01, -1.33451100421161595e-01,
    -1.26470584372301964e-01, -1.19483070065440011e-01, -1.12488943133186622e-01,
    -1.05488589749541992e-01, -9.84823965981192068e-02, -9.14707508403553859e-02,
    -8.44540400837108796e-02, -7.74326523498572866e-02, -7.04069760428551739e-02,
    -6.33773999173222885e-02, -5.63443130465927922e-02, -4.93081047908686260e-02,
    -4.22691647653636038e-02, -3.52278828084410245e-02, -2.81846489497456949e-02,
    -2.11398533783310888e-02, -1.40938864107824618e-02, -7.04713845933674626e-03,
    0.00000000000000000e+00, 7.04713845933674626e-03, 1.40938864107824618e-02,
    2.11398533783310888e-02, 2.81846489497456949e-02, 3.52278828084410245e-02,
    4.22691647653636038e-02, 4.93081047908686260e-02, 5.63443130465927922e-02,
    6.33773999173222885e-02, 7.04069760428551739e-02, 7.74326523498572866e-02,
    8.44540400837108796e-02, 9.14707508403553859e-02, 9.84823965981192068e-02,
    1.05488589749541992e-01, 1.12488943133186622e-01, 1.19483070065440011e-01,
    1.26470584372301964e-01, 1.33451100421161595e-01, 1.40424233152560168e-01,
    1.47389598111939940e-01, 1.54346811481378104e-01, 1.61295490111305256e-01,
    1.68235251552207477e-01, 1.75165714086311486e-01, 1.82086496759252203e-01,
    1.88997219411721873e-01, 1.95897502711100152e-01, 2.02786968183064686e-01,
    2.09665238243181201e-01, 2.16531936228472638e-01, 2.23386686428966891e-01,
    2.30229114119222172e-01, 2.37058845589829731e-01, 2.43875508178893030e-01,
    2.50678730303483199e-01, 2.57468141491069780e-01, 2.64243372410926769e-01,
    2.71004054905512548e-01, 2.77749822021824300e-01, 2.84480308042725560e-01,
    2.91195148518246683e-01, 2.97893980296857819e-01, 3.04576441556714039e-01,
    3.11242171836871806e-01, 3.17890812068476691e-01, 3.24522004605921843e-01,
    3.31135393257976807e-01, 3.37730623318886203e-01, 3.44307341599438044e-01,
    3.50865196458001183e-01, 3.57403837831532178e-01, 3.63922917266549628e-01,
    3.70422087950078249e-01, 3.76901004740559320e-01, 3.83359324198730367e-01,
    3.89796704618470768e-01, 3.96212806057615941e-01, 4.02607290368737103e-01,
    4.08979821229888685e-01, 4.15330064175321645e-01, 4.21657686626163319e-01,
    4.27962357921062742e-01, 4.34243749346802543e-01, 4.40501534168875775e-01,
    4.46735387662028471e-01, 4.52944987140767308e-01, 4.59130011989832332e-01,
    4.65290143694634728e-01, 4.71425065871658888e-01, 4.77534464298829175e-01,
    4.83618026945841051e-01, 4.89675444004456173e-01, 4.95706407918761471e-01,
    5.01710613415391915e-01, 5.07687757533716644e-01, 5.13637539655988573e-01,
    5.19559661537457029e-01, 5.25453827336442636e-01, 5.31319743644375619e-01,
    5.37157119515795145e-01, 5.42965666498311461e-01, 5.48745098662529407e-01,
    5.54495132631932508e-01, 5.60215487612728436e-01, 5.65905885423654387e-01,
    5.71566050525742830e-01, 5.77195710052045841e-01, 5.82794593837318797e-01,
    5.88362434447662563e-01, 5.93898967210121920e-01, 5.99403930242242922e-01,
    6.04877064481584403e-01, 6.10318113715186406e-01, 6.15726824608992640e-01,
    6.21102946737226436e-01, 6.26446232611719722e-01, 6.31756437711194274e-01,
    6.37033320510492440e-01, 6.42276642509759466e-01, 6.47486168263572415e-01,
    6.52661665410017466e-01, 6.57802904699713697e-01, 6.62909660024780578e-01,
    6.67981708447749734e-01, 6.73018830230418530e-01, 6.78020808862644486e-01,
    6.82987431091079178e-01, 6.87918486947839303e-01, 6.92813769779114685e-01,
    6.97673076273711223e-01, 7.02496206491527109e-01, 7.07282963891961103e-01,
    7.12033155362251979e-01, 7.16746591245747133e-01, 7.21423085370098915e-01,
    7.26062455075389579e-01, 7.30664521242181286e-01, 7.35229108319491509e-01,
    7.39756044352694708e-01, 7.44245161011347078e-01, 7.48696293616936570e-01,
    7.53109281170558198e-01, 7.57483966380513629e-01, 7.61820195689839164e-01,
    7.66117819303760106e-01, 7.70376691217076859e-01, 7.74596669241483404e-01,
    7.78777615032822723e-01, 7.82919394118283041e-01, 7.87021875923539449e-01,
    7.91084933799848344e-01, 7.95108445051100565e-01, 7.99092290960841445e-01,
    8.03036356819268660e-01, 8.06940531950217643e-01, 8.10804709738146556e-01,
    8.14628787655137465e-01, 8.18412667287925832e-01, 8.22156254364980410e-01,
    8.25859458783649969e-01, 8.29522194637401400e-01, 8.33144380243172611e-01,
    8.36725938168868755e-01, 8.40266795261030430e-01, 8.43766882672708607e-01,
    8.47226135891580912e-01, 8.50644494768350246e-01, 8.54021903545468586e-01,
    8.57358310886232156e-01, 8.60653669904299923e-01, 8.63907938193690494e-01,
    8.67121077859315248e-01, 8.70293055548113870e-01, 8.73423842480859358e-01,
    8.76513414484705322e-01, 8.79561752026556287e-01, 8.82568840247341946e-01,
    8.85534668997285057e-01, 8.88459232872257032e-01, 8.91342531251319903e-01,
    8.94184568335559038e-01, 8.96985353188316625e-01, 8.99744899776940055e-01,
    9.02463227016165659e-01, 9.05140358813261603e-01, 9.07776324115058930e-01,
    9.10371156957004324e-01, 9.12924896514370587e-01, 9.15437587155765065e-01,
    9.17909278499077552e-01, 9.20340025470012368e-01, 9.22729888363349238e-01,
    9.25078932907075657e-01, 9.27387230329536738e-01, 9.29654857429740078e-01,
    9.31881896650953667e-01, 9.34068436157725834e-01, 9.36214569916450801e-01,
    9.38320397779592863e-01, 9.40386025573669682e-01, 9.42411565191083045e-01,
    9.44397134685866613e-01, 9.46342858373402929e-01, 9.48248866934137347e-01,
    9.50115297521294866e-01, 9.51942293872573564e-01, 9.53730006425761112e-01,
    9.55478592438183671e-01, 9.57188216109860934e-01, 9.58859048710200224e-01,
    9.60491268708020263e-01, 9.62085061904651484e-01, 9.63640621569812117e-01,
    9.65158148579915665e-01, 9.66637851558416528e-01, 9.68079947017759901e-01,
    9.69484659502459212e-01, 9.70852221732792398e-01, 9.72182874748581782e-01,
    9.73476868052506883e-01, 9.74734459752402693e-01, 9.75955916702011761e-01,
    9.77141514639705666e-01, 9.78291538324758569e-01, 9.79406281670862633e-01,
    9.80486047876721334e-01, 9.81531149553740101e-01, 9.82541908851080614e-01,
    9.83518657578632771e-01, 9.84461737328814590e-01, 9.85371499598520328e-01,
    9.86248305913007606e-01, 9.87092527954034016e-01, 9.87904547695124258e-01,
    9.88684757547429460e-01, 9.89433560520240785e-01, 9.90151370400770170e-01,
    9.90838611958294257e-01, 9.91495721178106137e-01, 9.92123145530863115e-01,
    9.92721344282788576e-01, 9.93290788851684980e-01, 9.93831963212755021e-01,
    9.94345364356723382e-01, 9.94831502800621048e-01, 9.95290903148810302e-01,
    9.95724104698407220e-01, 9.96131662079315028e-01, 9.96514145914890292e-01,
    9.96872143485260209e-01, 9.97206259372221959e-01, 9.97517116063472375e-01,
    9.97805354495957308e-01, 9.98071634524930307e-01, 9.98316635318407419e-01,
    9.98541055697167890e-01, 9.98745614468095066e-01, 9.98931050830810574e-01,
    9.99098124967667589e-01, 9.99247618943342464e-01, 9.99380338025023574e-01,
    9.99497112467187199e-01, 9.99598799671910676e-01, 9.99686286448317696e-01,
    9.99760490924432088e-01, 9.99822363679787718e-01, 9.99872888120357572e-01,
    9.99913081144678251e-01, 9.99943996207054431e-01, 9.99966730098486245e-01,
    9.99982430354891649e-01, 9.99992298136257562e-01, 9.99997596379748499e-01,
    9.99999672956734420e-01
};
const double weights_9[511] = {
    9.45715933950007052e-07, 3.45456507169149140e-06, 7.36624069102321653e-06,
    1.25792781889592742e-05, 1.90213681905875831e-05, 2.66376412339000908e-05,
    3.53751372055189590e-05, 4.51863674126296147e-05, 5.60319507856164227e-05,
    6.78774554733972398e-05, 8.06899228014035279e-05, 9.44366322532705463e-05,
    1.09085545645741525e-04, 1.24606200241498356e-04, 1.40970302204104786e-04,
    1.58151830411132230e-04, 1.76126765545083191e-04, 1.94872642236641134e-04,
    2.14368090034216944e-04, 2.34592462123925193e-04, 2.55525589595236881e-04,
    2.77147657465187376e-04, 2.99439176850911713e-04, 3.22381020652862398e-04,
    3.45954492129903874e-04, 3.70141402122251668e-04, 3.94924138246873695e-04,
    4.20285716355361212e-04, 4.46209810101403260e-04, 4.72680758429262706e-04,
    4.99683553312800532e-04, 5.27203811431658370e-04, 5.55227733977307577e-04,
    5.83742058714979651e-04, 6.12734008012225193e-04, 6.42191235948505056e-04,
    6.72101776960108157e-04, 7.02453997827572323e-04, 7.33236554224767924e-04,
    7.64438352543882747e-04, 7.96048517297550870e-04, 8.28056364077226349e-04,
    8.60451377808527876e-04, 8.93223195879324868e-04, 9.26361595613111244e-04,
    9.59856485506936229e-04, 9.93697899638760823e-04, 1.02787599466367318e-03,
    1.06238104885340075e-03, 1.09720346268191941e-03, 1.13233376051597671e-03,
    1.16776259302858038e-03, 1.20348074001265970e-03, 1.23947911332878400e-03,
    1.27574875977346956e-03, 1.31228086370221487e-03, 1.34906674928353116e-03,
    1.38609788229672546e-03, 1.42336587141720511e-03, 1.46086246895890995e-03,
    1.49857957106456639e-03, 1.53650921735128923e-03, 1.57464359003212160e-03,
    1.61297501254393421e-03, 1.65149594771914579e-03, 1.69019899554346013e-03,
    1.72907689054461610e-03, 1.76812249885838885e-03, 1.80732881501808923e-03,
    1.84668895851282551e-03, 1.88619617015808481e-03, 1.92584380831993551e-03,
    1.96562534503150546e-03, 2.00553436203751174e-03, 2.04556454679958276e-03,
    2.08570968849203925e-03, 2.12596367401472535e-03, 2.16632048404649148e-03,
    2.20677418916003345e-03, 2.24731894601603406e-03, 2.28794899365195991e-03,
    2.32865864987842749e-03, 2.36944230779380502e-03, 2.41029443242563425e-03,
    2.45120955750556492e-03, 2.49218228238276942e-03, 2.53320726907925323e-03,
    2.57427923948908878e-03, 2.61539297272236123e-03, 2.65654330259352828e-03,
    2.69772511525294585e-03, 2.73893334695947529e-03, 2.78016298199139453e-03,
    2.82140905069222210e-03, 2.86266662764757870e-03, 2.90393082998878374e-03,
    2.94519681581857564e-03, 2.98645978275408281e-03, 3.02771496658198538e-03,
    3.06895764002069246e-03, 3.11018311158427554e-03, 3.15138672454287920e-03,
    3.19256385597434722e-03, 3.23370991590184349e-03, 3.27482034651233956e-03,
    3.31589062145094381e-03, 3.35691624518616753e-03, 3.39789275244138655e-03,
    3.43881570768790612e-03, 3.47968070469521166e-03, 3.52048336613417943e-03,
    3.56121934322919378e-03, 3.60188431545532426e-03, 3.64247399027690369e-03,
    3.68298410292403891e-03, 3.72341041620379530e-03, 3.76374872034296358e-03,
    3.80399483285952808e-03, 3.84414459846013157e-03, 3.88419388896099572e-03,
    3.92413860322995793e-03, 3.96397466714742443e-03, 4.00369803358421698e-03,
    4.04330468239443019e-03, 4.08279062042157803e-03, 4.12215188151643375e-03,
    4.16138452656509769e-03, 4.20048464352596601e-03, 4.23944834747438156e-03,
    4.27827178065384468e-03, 4.31695111253279501e-03, 4.35548253986604329e-03,
    4.39386228676004204e-03, 4.43208660474124754e-03, 4.47015177282692692e-03,
    4.50805409759782137e-03, 4.54578991327213300e-03, 4.58335558178039459e-03,
    4.62074749284080693e-03, 4.65796206403469755e-03, 4.69499574088179036e-03,
    4.73184499691503297e-03, 4.76850633375474914e-03, 4.80497628118194131e-03,
    4.84125139721057127e-03, 4.87732826815870553e-03, 4.91320350871841862e-03,
    4.94887376202437449e-03, 4.98433569972103058e-03, 5.01958602202842025e-03,
    5.05462145780650150e-03, 5.08943876461803984e-03, 5.12403472879005388e-03,
    5.15840616547381080e-03, 5.19254991870341572e-03, 5.22646286145300558e-03,
    5.26014189569259331e-03, 5.29358395244259889e-03, 5.32678599182711838e-03,
    5.35974500312596646e-03, 5.39245800482555590e-03, 5.42492204466865722e-03,
    5.45713419970309845e-03, 5.48909157632945614e-03, 5.52079131034778712e-03,
    5.55223056700346329e-03, 5.58340654103215654e-03, 5.61431645670402470e-03,
    5.64495756786715340e-03, 5.67532715799029790e-03, 5.70542254020497356e-03,
    5.73524105734693739e-03, 5.76478008199711109e-03, 5.79403701652197664e-03,
    5.82300929311348019e-03, 5.85169437382850131e-03, 5.88008975062788777e-03,
    5.90819294541511820e-03, 5.93600151007459866e-03, 5.96351302650963491e-03,
    5.99072510668009501e-03, 6.01763539263978128e-03, 6.04424155657354648e-03,
    6.07054130083414974e-03, 6.09653235797888698e-03, 6.12221249080599321e-03,
    6.14757949239083754e-03, 6.17263118612191956e-03, 6.19736542573666015e-03,
    6.22178009535701796e-03, 6.24587310952490725e-03, 6.26964241323744228e-03,
    6.29308598198198826e-03, 6.31620182177103969e-03, 6.33898796917690185e-03,
    6.36144249136619180e-03, 6.38356348613413737e-03, 6.40534908193868095e-03,
    6.42679743793437425e-03, 6.44790674400605706e-03, 6.46867522080231492e-03,
    6.48910111976869989e-03, 6.50918272318071200e-03, 6.52891834417652483e-03,
    6.54830632678944039e-03, 6.56734504598007612e-03, 6.58603290766824907e-03,
    6.60436834876456519e-03, 6.62234983720168518e-03, 6.63997587196526497e-03,
    6.65724498312454671e-03, 6.67415573186258982e-03, 6.69070671050612988e-03,
    6.70689654255504902e-03, 6.72272388271144116e-03, 6.73818741690825757e-03,
    6.75328586233752554e-03, 6.76801796747810661e-03, 6.78238251212300719e-03,
    6.79637830740619821e-03, 6.81000419582894652e-03, 6.82325905128564579e-03,
    6.83614177908911224e-03, 6.84865131599535822e-03, 6.86078663022780724e-03,
    6.87254672150094861e-03, 6.88393062104341452e-03, 6.89493739162046811e-03,
    6.90556612755588353e-03, 6.91581595475321449e-03, 6.92568603071643148e-03,
    6.93517554456992043e-03, 6.94428371707782582e-03, 6.95300980066273101e-03,
    6.96135307942366555e-03, 6.96931286915342552e-03, 6.97688851735519568e-03,
    6.98407940325846896e-03, 6.99088493783425226e-03, 6.99730456380954005e-03,
    7.00333775568106557e-03, 7.00898401972830428e-03, 7.01424289402572884e-03,
    7.01911394845431205e-03, 7.02359678471225872e-03, 7.02769103632498206e-03,
    7.03139636865428731e-03, 7.03471247890678775e-03, 7.03763909614153055e-03,
    7.04017598127683070e-03, 7.04232292709631221e-03, 7.04407975825415041e-03,
    7.04544633127951458e-03, 7.04642253458020399e-03, 7.04700828844547975e-03,
    7.04720354504808928e-03, 7.04700828844547975e-03, 7.04642253458020399e-03,
    7.04544633127951458e-03, 7.04407975825415041e-03, 7.04232292709631221e-03,
    7.04017598127683070e-03, 7.03763909614153055e-03, 7.03471247890678775e-03,
    7.03139636865428731e-03, 7.02769103632498206e-03, 7.02359678471225872e-03,
    7.01911394845431205e-03, 7.01424289402572884e-03, 7.00898401972830428e-03,
    7.00333775568106557e-03, 6.99730456380954005e-03, 6.99088493783425226e-03,
    6.98407940325846896e-03, 6.97688851735519568e-03, 6.96931286915342552e-03,
    6.96135307942366555e-03, 6.95300980066273101e-03, 6.94428371707782582e-03,
    6.93517554456992043e-03, 6.92568603071643148e-03, 6.91581595475321449e-03,
    6.90556612755588353e-03, 6.89493739162046811e-03, 6.88393062104341452e-03,
    6.87254672150094861e-03, 6.86078663022780724e-03, 6.84865131599535822e-03,
    6.83614177908911224e-03, 6.82325905128564579e-03, 6.81000419582894652e-03,
    6.79637830740619821e-03, 6.78238251212300719e-03, 6.76801796747810661e-03,
    6.75328586233752554e-03, 6.73818741690825757e-03, 6.72272388271144116e-03,
    6.70689654255504902e-03, 6.69070671050612988e-03, 6.67415573186258982e-03,
    6.65724498312454671e-03, 6.63997587196526497e-03, 6.62234983720168518e-03,
    6.60436834876456519e-03, 6.58603290766824907e-03, 6.56734504598007612e-03,
    6.54830632678944039e-03, 6.52891834417652483e-03, 6.50918272318071200e-03,
    6.48910111976869989e-03, 6.46867522080231492e-03, 6.44790674400605706e-03,
    6.42679743793437425e-03, 6.40534908193868095e-03, 6.38356348613413737e-03,
    6.36144249136619180e-03, 6.33898796917690185e-03, 6.31620182177103969e-03,
    6.29308598198198826e-03, 6.26964241323744228e-03, 6.24587310952490725e-03,
    6.22178009535701796e-03, 6.19736542573666015e-03, 6.17263118612191956e-03,
    6.14757949239083754e-03, 6.12221249080599321e-03, 6.09653235797888698e-03,
    6.07054130083414974e-03, 6.04424155657354648e-03, 6.01763539263978128e-03,
    5.99072510668009501e-03, 5.96351302650963491e-03, 5.93600151007459866e-03,
    5.90819294541511820e-03, 5.88008975062788777e-03, 5.85169437382850131e-03,
    5.82300929311348019e-03, 5.79403701652197664e-03, 5.76478008199711109e-03,
    5.73524105734693739e-03, 5.70542254020497356e-03, 5.67532715799029790e-03,
    5.64495756786715340e-03, 5.61431645670402470e-03, 5.58340654103215654e-03,
    5.55223056700346329e-03, 5.52079131034778712e-03, 5.48909157632945614e-03,
    5.45713419970309845e-03, 5.42492204466865722e-03, 5.39245800482555590e-03,
    5.35974500312596646e-03, 5.32678599182711838e-03, 5.29358395244259889e-03,
    5.26014189569259331e-03, 5.22646286145300558e-03, 5.19254991870341572e-03,
    5.15840616547381080e-03, 5.12403472879005388e-03, 5.08943876461803984e-03,
    5.05462145780650150e-03, 5.01958602202842025e-03, 4.98433569972103058e-03,
    4.94887376202437449e-03, 4.91320350871841862e-03, 4.87732826815870553e-03,
    4.84125139721057127e-03, 4.80497628118194131e-03, 4.76850633375474914e-03,
    4.73184499691503297e-03, 4.69499574088179036e-03, 4.65796206403469755e-03,
    4.62074749284080693e-03, 4.58335558178039459e-03, 4.54578991327213300e-03,
    4.50805409759782137e-03, 4.47015177282692692e-03, 4.43208660474124754e-03,
    4.39386228676004204e-03, 4.35548253986604329e-03, 4.31695111253279501e-03,
    4.27827178065384468e-03, 4.23944834747438156e-03, 4.20048464352596601e-03,
    4.16138452656509769e-03, 4.12215188151643375e-03, 4.08279062042157803e-03,
    4.04330468239443019e-03, 4.00369803358421698e-03, 3.96397466714742443e-03,
    3.92413860322995793e-03, 3.88419388896099572e-03, 3.84414459846013157e-03,
    3.80399483285952808e-03, 3.76374872034296358e-03, 3.72341041620379530e-03,
    3.68298410292403891e-03, 3.64247399027690369e-03, 3.60188431545532426e-03,
    3.56121934322919378e-03, 3.52048336613417943e-03, 3.47968070469521166e-03,
    3.43881570768790612e-03, 3.39789275244138655e-03, 3.35691624518616753e-03,
    3.31589062145094381e-03, 3.27482034651233956e-03, 3.23370991590184349e-03,
    3.19256385597434722e-03, 3.15138672454287920e-03, 3.11018311158427554e-03,
    3.06895764002069246e-03, 3.02771496658198538e-03, 2.98645978275408281e-03,
    2.94519681581857564e-03, 2.90393082998878374e-03, 2.86266662764757870e-03,
    2.82140905069222210e-03, 2.78016298199139453e-03, 2.73893334695947529e-03,
    2.69772511525294585e-03, 2.65654330259352828e-03, 2.61539297272236123e-03,
    2.57427923948908878e-03, 2.53320726907925323e-03, 2.49218228238276942e-03,
    2.45120955750556492e-03, 2.41029443242563425e-03, 2.36944230779380502e-03,
    2.32865864987842749e-03, 2.28794899365195991e-03, 2.24731894601603406e-03,
    2.20677418916003345e-03, 2.16632048404649148e-03, 2.12596367401472535e-03,
    2.08570968849203925e-03, 2.04556454679958276e-03, 2.00553436203751174e-03,
    1.96562534503150546e-03, 1.92584380831993551e-03, 1.88619617015808481e-03,
    1.84668895851282551e-03, 1.80732881501808923e-03, 1.76812249885838885e-03,
    1.72907689054461610e-03, 1.69019899554346013e-03, 1.65149594771914579e-03,
    1.61297501254393421e-03, 1.57464359003212160e-03, 1.53650921735128923e-03,
    1.49857957106456639e-03, 1.46086246895890995e-03, 1.42336587141720511e-03,
    1.38609788229672546e-03, 1.34906674928353116e-03, 1.31228086370221487e-03,
    1.27574875977346956e-03, 1.23947911332878400e-03, 1.20348074001265970e-03,
    1.16776259302858038e-03, 1.13233376051597671e-03, 1.09720346268191941e-03,
    1.06238104885340075e-03, 1.02787599466367318e-03, 9.93697899638760823e-04,
    9.59856485506936229e-04, 9.26361595613111244e-04, 8.93223195879324868e-04,
    8.60451377808527876e-04, 8.28056364077226349e-04, 7.96048517297550870e-04,
    7.64438352543882747e-04, 7.33236554224767924e-04, 7.02453997827572323e-04,
    6.72101776960108157e-04, 6.42191235948505056e-04, 6.12734008012225193e-04,
    5.83742058714979651e-04, 5.55227733977307577e-04, 5.27203811431658370e-04,
    4.99683553312800532e-04, 4.72680758429262706e-04, 4.46209810101403260e-04,
    4.20285716355361212e-04, 3.94924138246873695e-04, 3.70141402122251668e-04,
    3.45954492129903874e-04, 3.22381020652862398e-04, 2.99439176850911713e-04,
    2.77147657465187376e-04, 2.55525589595236881e-04, 2.34592462123925193e-04,
    2.14368090034216944e-04, 1.94872642236641134e-04, 1.76126765545083191e-04,
    1.58151830411132230e-04, 1.40970302204104786e-04, 1.24606200241498356e-04,
    1.09085545645741525e-04, 9.44366322532705463e-05, 8.06899228014035279e-05,
    6.78774554733972398e-05, 5.60319507856164227e-05, 4.51863674126296147e-05,
    3.53751372055189590e-05, 2.66376412339000908e-05, 1.90213681905875831e-05,
    1.25792781889592742e-05, 7.36624069102321653e-06, 3.45456507169149140e-06,
    9.45715933950007052e-07
};
}  // namespace

const double* nodes(int level) {
  switch (level) {
    case 1: return nodes_1;
    case 2: return nodes_2;
    case 3: return nodes_3;
    case 4: return nodes_4;
    case 5: return nodes_5;
    case 6: return nodes_6;
    case 7: return nodes_7;
    case 8: return nodes_8;
    case 9: return nodes_9;
    default: return nullptr;
  }
}

const double* weights(int level) {
  switch (level) {
    case 1: return weights_1;
    case 2: return weights_2;
    case 3: return weights_3;
    case 4: return weights_4;
    case 5: return weights_5;
    case 6: return weights_6;
    case 7: return weights_7;
    case 8: return weights_8;
    case 9: return weights_9;
    default: return nullptr;
  }
}

int count(int level) { return (1 << level) - 1; }

}  // namespace patterson_table
}  // namespace epf
