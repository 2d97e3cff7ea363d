//! Reference values computed offline with mpmath (see oracle/ml_oracle.py).
#![allow(dead_code)]

/// (x, Gamma(x))
pub const GAMMA: &[(f64, f64)] = &[
    (1.3, 0.8974706963062772),
    (0.001, 999.4237724845955),
    (0.1, 9.51350769866873),
    (0.25, 3.625609908221908),
    (0.7, 1.298055332647558),
    (1.5, 0.886226925452758),
    (2.5, 1.329340388179137),
    (3.7, 4.170651783796604),
    (7.25, 1155.3810139199898),
    (12.5, 136843365.46556586),
    (33.3, 7.487577596522633e+35),
    (57.9, 2.702800855654722e+76),
    (99.5, 9.367802114655996e+154),
    (123.456, 8.853149329319216e+203),
    (150.1, 6.2846467789593e+260),
    (169.5, 3.281470451067846e+303),
    (170.0, 4.269068009004705e+304),
];

/// (x, E_{1/2}(x)) from exp(x^2) erfc(-x)
pub const ML_HALF_ERFC: &[(f64, f64)] = &[
    (-5.0, 0.11070463773306863),
    (-4.7368421052631575, 0.11661277220309464),
    (-4.473684210526316, 0.12317320291319891),
    (-4.2105263157894735, 0.13049776441471816),
    (-3.947368421052632, 0.13872478053366546),
    (-3.6842105263157894, 0.14802719812822596),
    (-3.4210526315789473, 0.1586238319764403),
    (-3.1578947368421053, 0.17079516337184347),
    (-2.8947368421052633, 0.18490593013477064),
    (-2.6315789473684212, 0.20143805424694727),
    (-2.3684210526315788, 0.22103965906498782),
    (-2.1052631578947367, 0.2445997444400909),
    (-1.8421052631578947, 0.2733648802766443),
    (-1.5789473684210527, 0.3091267438131794),
    (-1.3157894736842106, 0.3545329751985836),
    (-1.0526315789473686, 0.4136203494011812),
    (-0.7894736842105265, 0.49276445825839565),
    (-0.5263157894736841, 0.6024434003690207),
    (-0.2631578947368425, 0.7606678256772704),
    (0.0, 1.0),
];

/// E_{0.6,0.6}(-50)
pub const ML_06_06_M50: f64 = 0.00010979389735394112;

/// (alpha, beta, Re z, Im z, Re E, Im E)
pub const ML_GRID: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 1.0, 0.5, 0.0, 2.0620157899559994, 0.0),
    (0.3, 1.0, 0.3535533905932738, 0.35355339059327373, 1.2327886371000922, 0.7377101794163258),
    (0.3, 1.0, 3.061616997868383e-17, 0.5, 0.768775494900599, 0.4475234400900927),
    (0.3, 1.0, -0.35355339059327373, 0.3535533905932738, 0.6563453496778484, 0.19644102336829794),
    (0.3, 1.0, -0.5, 0.0, 0.6326490059435991, 0.0),
    (0.3, 1.0, 1.5, 0.0, 158.07887059078354, 0.0),
    (0.3, 1.0, 1.0606601717798214, 1.0606601717798212, -0.47572086252862383, 0.7179300677968813),
    (0.3, 1.0, 9.184850993605148e-17, 1.5, 0.21111300342969608, 0.4508504960600136),
    (0.3, 1.0, -1.0606601717798212, 1.0606601717798214, 0.3305981349328264, 0.1954893804207662),
    (0.3, 1.0, -1.5, 0.0, 0.35538165657360316, 0.0),
    (0.3, 1.0, 4.0, 0.0, 4.4100941505093525e+44, 0.0),
    (0.3, 1.0, 2.8284271247461903, 2.82842712474619, -0.1359017263289912, 0.16575751027581484),
    (0.3, 1.0, 2.4492935982947064e-16, 4.0, 0.02879934662553222, 0.19067329939134772),
    (0.3, 1.0, -2.82842712474619, 2.8284271247461903, 0.13454802562767196, 0.10931940874893462),
    (0.3, 1.0, -4.0, 0.0, 0.16650174431551665, 0.0),
    (0.3, 1.0, 17.67766952966369, 17.677669529663685, -0.02178543024995575, 0.02251582368650971),
    (0.3, 1.0, 1.5308084989341915e-15, 25.0, 0.0007217577782319032, 0.030808571174556435),
    (0.3, 1.0, -17.677669529663685, 17.67766952966369, 0.02178455069351915, 0.021073184821550437),
    (0.3, 1.0, -25.0, 0.0, 0.030101147530310995, 0.0),
    (0.3, 1.0, 34.64823227814083, 34.648232278140824, -0.01111660636077284, 0.011305605286141848),
    (0.3, 1.0, 3.0003846579110155e-15, 49.0, 0.00018779496760188872, 0.015721211342677323),
    (0.3, 1.0, -34.648232278140824, 34.64823227814083, 0.011116546762022048, 0.010930074899284147),
    (0.3, 1.0, -49.0, 0.0, 0.01553526287751099, 0.0),
    (0.3, 1.0, 49.49747468305833, 49.49747468305832, -0.0077818359124932086, 0.007874267089054709),
    (0.3, 1.0, 4.2862637970157365e-15, 70.0, 9.201209195658204e-05, 0.011005167433442894),
    (0.3, 1.0, -49.49747468305832, 49.49747468305833, 0.007781821602837272, 0.007690257208870131),
    (0.3, 1.0, -70.0, 0.0, 0.01091378255903992, 0.0),
    (0.3, 1.0, 70.71067811865476, 70.71067811865474, -0.005447359145452738, 0.005492588500891902),
    (0.3, 1.0, 6.123233995736766e-15, 100.0, 4.508413761918158e-05, 0.0077037266967545405),
    (0.3, 1.0, -70.71067811865474, 70.71067811865476, 0.005447355709704585, 0.0054024236607045015),
    (0.3, 1.0, -100.0, 0.0, 0.007658856222286642, 0.0),
    (0.3, 0.3, 0.5, 0.0, 1.1694769581219358, 0.0),
    (0.3, 0.3, 0.3535533905932738, 0.35355339059327373, 0.38868941580380223, 0.5256501821763095),
    (0.3, 0.3, 3.061616997868383e-17, 0.5, 0.15812707687185074, 0.22773414284831492),
    (0.3, 0.3, -0.35355339059327373, 0.3535533905932738, 0.14377529914538878, 0.08690521423464821),
    (0.3, 0.3, -0.5, 0.0, 0.14375650014722127, 0.0),
    (0.3, 0.3, 1.5, 0.0, 409.04757535459083, 0.0),
    (0.3, 0.3, 1.0606601717798214, 1.0606601717798212, -0.2523753361158281, -0.4058994240517115),
    (0.3, 0.3, 9.184850993605148e-17, 1.5, -0.05760802521688506, 0.079701988864019),
    (0.3, 0.3, -1.0606601717798212, 1.0606601717798214, 0.028481578656712598, 0.048303996497173124),
    (0.3, 0.3, -1.5, 0.0, 0.04761860082698702, 0.0),
    (0.3, 0.3, 4.0, 0.0, 1.120094095007576e+46, 0.0),
    (0.3, 0.3, 2.8284271247461903, 2.82842712474619, -0.0032233778811444906, -0.01769595394290943),
    (0.3, 0.3, 2.4492935982947064e-16, 4.0, -0.013969688374736323, 0.004405267544754042),
    (0.3, 0.3, -2.82842712474619, 2.8284271247461903, 0.0024911738035397835, 0.011402091075105768),
    (0.3, 0.3, -4.0, 0.0, 0.010705694130905866, 0.0),
    (0.3, 0.3, 17.67766952966369, 17.677669529663685, -1.2468474814867264e-05, -0.0003820418090256599),
    (0.3, 0.3, 1.5308084989341915e-15, 25.0, -0.00036954001169398477, 1.7332706857329064e-05),
    (0.3, 0.3, -17.677669529663685, 17.67766952966369, 1.198411371584386e-05, 0.0003575295138895688),
    (0.3, 0.3, -25.0, 0.0, 0.0003527338896015149, 0.0),
    (0.3, 0.3, 34.64823227814083, 34.648232278140824, -1.641650126827582e-06, -9.788409300339764e-05),
    (0.3, 0.3, 3.0003846579110155e-15, 49.0, -9.624134965548758e-05, 2.2998947969668957e-06),
    (0.3, 0.3, -34.648232278140824, 34.64823227814083, 1.6088294646563753e-06, 9.463154927982371e-05),
    (0.3, 0.3, -49.0, 0.0, 9.39757351062912e-05, 0.0),
    (0.3, 0.3, 49.49747468305833, 49.49747468305832, -5.61487556088646e-07, -4.772404186988361e-05),
    (0.3, 0.3, 4.2862637970157365e-15, 70.0, -4.716237366050643e-05, 7.887363755963234e-07),
    (0.3, 0.3, -49.49747468305832, 49.49747468305833, 5.536073127278019e-07, 4.6608600082587e-05),
    (0.3, 0.3, -70.0, 0.0, 4.638176283809121e-05, 0.0),
    (0.3, 0.3, 70.71067811865476, 70.71067811865474, -1.9219995788064381e-07, -2.3302779027026384e-05),
    (0.3, 0.3, 6.123233995736766e-15, 100.0, -2.3110549069527686e-05, 2.7051513086752435e-07),
    (0.3, 0.3, -70.71067811865474, 70.71067811865476, 1.9030791131287571e-07, 2.2920212851251975e-05),
    (0.3, 0.3, -100.0, 0.0, 2.284196721428951e-05, 0.0),
    (0.3, 0.5, 0.5, 0.0, 1.5196111396142773, 0.0),
    (0.3, 0.5, 0.3535533905932738, 0.35355339059327373, 0.6838243848646067, 0.6276537144374038),
    (0.3, 0.5, 3.061616997868383e-17, 0.5, 0.35867325806488176, 0.3150838485907351),
    (0.3, 0.5, -0.35355339059327373, 0.3535533905932738, 0.31119078321688204, 0.12829002530190758),
    (0.3, 0.5, -0.5, 0.0, 0.30363310176042707, 0.0),
    (0.3, 0.5, 1.5, 0.0, 312.03437906780897, 0.0),
    (0.3, 0.5, 1.0606601717798214, 1.0606601717798212, -0.41899371310623085, -0.08705036355637355),
    (0.3, 0.5, 9.184850993605148e-17, 1.5, 0.01323063387665317, 0.202258253806212),
    (0.3, 0.5, -1.0606601717798212, 1.0606601717798214, 0.12020181449917053, 0.09784897096132025),
    (0.3, 0.5, -1.5, 0.0, 0.14317908964771223, 0.0),
    (0.3, 0.5, 4.0, 0.0, 4.445096361795986e+45, 0.0),
    (0.3, 0.5, 2.8284271247461903, 2.82842712474619, -0.042408321470835446, 0.029595626744894875),
    (0.3, 0.5, 2.4492935982947064e-16, 4.0, -0.0048650126503492035, 0.058625235561230817),
    (0.3, 0.5, -2.82842712474619, 2.8284271247461903, 0.040574866612102134, 0.04144161217113371),
    (0.3, 0.5, -4.0, 0.0, 0.05697134171501642, 0.0),
    (0.3, 0.5, 17.67766952966369, 17.677669529663685, -0.006173772715918547, 0.005999136694845367),
    (0.3, 0.5, 1.5308084989341915e-15, 25.0, -0.00014912434912162852, 0.008730185824734176),
    (0.3, 0.5, -17.677669529663685, 17.67766952966369, 0.006172574680017432, 0.0062985883468415),
    (0.3, 0.5, -25.0, 0.0, 0.008846127292272285, 0.0),
    (0.3, 0.5, 34.64823227814083, 34.648232278140824, -0.0031450315573333, 0.003102787642860682),
    (0.3, 0.5, 3.0003846579110155e-15, 49.0, -3.8933929351683725e-05, 0.0044476888788352),
    (0.3, 0.5, -34.648232278140824, 34.64823227814083, 0.0031449503781363158, 0.003180736767566422),
    (0.3, 0.5, -49.0, 0.0, 0.004482137830167491, 0.0),
    (0.3, 0.5, 49.49747468305833, 49.49747468305832, -0.002200927088748453, 0.002180712350406902),
    (0.3, 0.5, 4.2862637970157365e-15, 70.0, -1.9087776801824232e-05, 0.0031125671562918867),
    (0.3, 0.5, -49.49747468305832, 49.49747468305833, 0.0022009075976252308, 0.002218907405347638),
    (0.3, 0.5, -70.0, 0.0, 0.0031301082319652404, 0.0),
    (0.3, 0.5, 70.71067811865476, 70.71067811865474, -0.0015404467975726364, 0.00153070680957196),
    (0.3, 0.5, 6.123233995736766e-15, 100.0, -9.355446999429453e-06, 0.0021785174441013213),
    (0.3, 0.5, -70.71067811865474, 70.71067811865476, 0.0015404421177540643, 0.0015494223845911167),
    (0.3, 0.5, -100.0, 0.0, 0.0021873403669499525, 0.0),
    (0.3, 1.7, 0.5, 0.0, 1.9565797228478283, 0.0),
    (0.3, 1.7, 0.3535533905932738, 0.35355339059327373, 1.3508204643109574, 0.6148743625628443),
    (0.3, 1.7, 3.061616997868383e-17, 0.5, 0.9162868167211186, 0.4239664196264777),
    (0.3, 1.7, -0.35355339059327373, 0.3535533905932738, 0.7830035199134243, 0.19559733983656072),
    (0.3, 1.7, -0.5, 0.0, 0.7521654167250162, 0.0),
    (0.3, 1.7, 1.5, 0.0, 60.05193017500639, 0.0),
    (0.3, 1.7, 1.0606601717798214, 1.0606601717798212, -0.15713379261972946, 1.1956271252971866),
    (0.3, 1.7, 9.184850993605148e-17, 1.5, 0.35834060525044875, 0.5368260554413935),
    (0.3, 1.7, -1.0606601717798212, 1.0606601717798214, 0.43904412658566955, 0.22475979452766678),
    (0.3, 1.7, -1.5, 0.0, 0.45553895345941736, 0.0),
    (0.3, 1.7, 4.0, 0.0, 1.736365766326557e+43, 0.0),
    (0.3, 1.7, 2.8284271247461903, 2.82842712474619, -0.18737850418396795, 0.27430848818127074),
    (0.3, 1.7, 2.4492935982947064e-16, 4.0, 0.06347319336558725, 0.26857323839753255),
    (0.3, 1.7, -2.82842712474619, 2.8284271247461903, 0.1917933972384767, 0.1428700890367273),
    (0.3, 1.7, -4.0, 0.0, 0.2275086312827471, 0.0),
    (0.3, 1.7, 17.67766952966369, 17.677669529663685, -0.03183775365492628, 0.03359875974154318),
    (0.3, 1.7, 1.5308084989341915e-15, 25.0, 0.0016803745026866257, 0.045027470299486436),
    (0.3, 1.7, -17.677669529663685, 17.67766952966369, 0.031840642308661016, 0.030235120555389267),
    (0.3, 1.7, -25.0, 0.0, 0.04345415099964463, 0.0),
    (0.3, 1.7, 34.64823227814083, 34.648232278140824, -0.01625906810863462, 0.016707282276341467),
    (0.3, 1.7, 3.0003846579110155e-15, 49.0, 0.0004376934647279053, 0.02299393458010173),
    (0.3, 1.7, -34.648232278140824, 34.64823227814083, 0.016259263844662326, 0.015831699583842996),
    (0.3, 1.7, -49.0, 0.0, 0.022570647066981163, 0.0),
    (0.3, 1.7, 49.49747468305833, 49.49747468305832, -0.01138323597985359, 0.011601318693992398),
    (0.3, 1.7, 4.2862637970157365e-15, 70.0, 0.00021449425744591265, 0.016098360197019112),
    (0.3, 1.7, -49.49747468305832, 49.49747468305833, 0.011383282976071272, 0.011172283179702917),
    (0.3, 1.7, -70.0, 0.0, 0.015888827322412754, 0.0),
    (0.3, 1.7, 70.71067811865476, 70.71067811865474, -0.007968908191842865, 0.008075242254829088),
    (0.3, 1.7, 6.123233995736766e-15, 100.0, 0.00010510805862178714, 0.011269746064626227),
    (0.3, 1.7, -70.71067811865474, 70.71067811865476, 0.007968919475634582, 0.00786501485341958),
    (0.3, 1.7, -100.0, 0.0, 0.011166344596245891, 0.0),
    (0.5, 1.0, 0.5, 0.0, 1.952360489182557, 0.0),
    (0.5, 1.0, 0.3535533905932738, 0.35355339059327373, 1.295215356528549, 0.7057401872039087),
    (0.5, 1.0, 3.061616997868383e-17, 0.5, 0.7788007830714049, 0.47892517290104347),
    (0.5, 1.0, -0.35355339059327373, 0.3535533905932738, 0.6426094868927408, 0.21093226869486295),
    (0.5, 1.0, -0.5, 0.0, 0.6156903441929259, 0.0),
    (0.5, 1.0, 1.5, 0.0, 18.653886256262734, 0.0),
    (0.5, 1.0, 1.0606601717798214, 1.0606601717798212, -1.5440001421688503, 1.7588184283936148),
    (0.5, 1.0, 9.184850993605148e-17, 1.5, 0.1053992245618643, 0.4832273301407691),
    (0.5, 1.0, -1.0606601717798212, 1.0606601717798214, 0.28765289672337147, 0.20267203461777167),
    (0.5, 1.0, -1.5, 0.0, 0.3215854164543175, 0.0),
    (0.5, 1.0, 4.0, 0.0, 17772220.904016286, 0.0),
    (0.5, 1.0, 2.8284271247461903, 2.82842712474619, -2.01784507154533, -0.479427662827947),
    (0.5, 1.0, 2.4492935982947064e-16, 4.0, 1.1253517470964574e-07, 0.14595358990015278),
    (0.5, 1.0, -2.82842712474619, 2.8284271247461903, 0.1025261108985557, 0.0963789705021844),
    (0.5, 1.0, -4.0, 0.0, 0.13699945762506138, 0.0),
    (0.5, 1.0, 9.0, 0.0, 3.0121946291700612e+35, 0.0),
    (0.5, 1.0, 6.3639610306789285, 6.363961030678928, 1.5087766374133236, -1.2157275958087674),
    (0.5, 1.0, 5.51091059616309e-16, 9.0, -3.9118945205912544e-18, 0.06308209005925829),
    (0.5, 1.0, -6.363961030678928, 6.3639610306789285, 0.04459532662996671, 0.0440483927401417),
    (0.5, 1.0, -9.0, 0.0, 0.06230772403777468, 0.0),
    (0.5, 1.0, 25.0, 0.0, 5.4335189393274735e+271, 0.0),
    (0.5, 1.0, 17.67766952966369, 17.677669529663685, -1.984744940561574, 0.3679774402154862),
    (0.5, 1.0, 1.5308084989341915e-15, 25.0, -1.385195754194304e-18, 0.022585680912640474),
    (0.5, 1.0, -17.677669529663685, 17.67766952966369, 0.015970426608399153, 0.015944894547553722),
    (0.5, 1.0, -25.0, 0.0, 0.02254957243264136, 0.0),
    (0.5, 1.0, 34.64823227814083, 34.648232278140824, 1.3515941656179558, 1.474807574316088),
    (0.5, 1.0, 3.0003846579110155e-15, 49.0, -7.05474562205314e-19, 0.011516472399336335),
    (0.5, 1.0, -34.648232278140824, 34.64823227814083, 0.008143373608249415, 0.008139982657022544),
    (0.5, 1.0, -49.0, 0.0, 0.011511676863882964, 0.0),
    (0.5, 1.0, 49.49747468305833, 49.49747468305832, 1.2615917327104185, -1.5415480836542776),
    (0.5, 1.0, 4.2862637970157365e-15, 70.0, -4.936747040618755e-19, 0.008060673879228627),
    (0.5, 1.0, -49.49747468305832, 49.49747468305833, 0.005699756804704066, 0.005698593707858315),
    (0.5, 1.0, -70.0, 0.0, 0.008059029011381204, 0.0),
    (0.5, 1.0, 70.71067811865476, 70.71067811865474, -1.9083003587678598, -0.6072395544723521),
    (0.5, 1.0, 6.123233995736766e-15, 100.0, -3.4551831673411873e-19, 0.005642177972594138),
    (0.5, 1.0, -70.71067811865474, 70.71067811865476, 0.003989622245226379, 0.0039892233029609385),
    (0.5, 1.0, -100.0, 0.0, 0.005641613782989433, 0.0),
    (0.5, 0.5, 0.5, 0.0, 1.5403698281390348, 0.0),
    (0.5, 0.5, 0.3535533905932738, 0.35355339059327373, 0.772600528333027, 0.7074446169130181),
    (0.5, 0.5, 3.061616997868383e-17, 0.5, 0.32472699709723457, 0.38940039153570244),
    (0.5, 0.5, -0.35355339059327373, 0.3535533905932738, 0.26241700184682365, 0.1526209441357322),
    (0.5, 0.5, -0.5, 0.0, 0.25634441145129333, 0.0),
    (0.5, 0.5, 1.5, 0.0, 28.545018967941857, 0.0),
    (0.5, 0.5, 1.0606601717798214, 1.0606601717798212, -2.938978528862612, 0.22784920036860573),
    (0.5, 0.5, 9.184850993605148e-17, 1.5, -0.16065141166339733, 0.1580988368427965),
    (0.5, 0.5, -1.0606601717798212, 1.0606601717798214, 0.04412145764353031, 0.09013581579892287),
    (0.5, 0.5, -1.5, 0.0, 0.08181145886628004, 0.0),
    (0.5, 0.5, 4.0, 0.0, 71088884.18025473, 0.0),
    (0.5, 0.5, 2.8284271247461903, 2.82842712474619, -3.787111944450236, -7.063353939790463),
    (0.5, 0.5, 2.4492935982947064e-16, 4.0, -0.019624776052854846, 4.501406988743313e-07),
    (0.5, 0.5, -2.82842712474619, 2.8284271247461903, 0.0016010560640540687, 0.017386738636719717),
    (0.5, 0.5, -4.0, 0.0, 0.016191753047510728, 0.0),
    (0.5, 0.5, 9.0, 0.0, 2.710975166253055e+36, 0.0),
    (0.5, 0.5, 6.3639610306789285, 6.363961030678928, 17.902828351692918, 1.8649526808492014),
    (0.5, 0.5, 5.51091059616309e-16, 9.0, -0.0035492269855682906, -4.430748317532115e-19),
    (0.5, 0.5, -6.363961030678928, 6.3639610306789285, 6.440786194752908e-05, 0.0034806659612040616),
    (0.5, 0.5, -9.0, 0.0, 0.0034200672077841295, 0.0),
    (0.5, 0.5, 25.0, 0.0, 1.3583797348318683e+273, 0.0),
    (0.5, 0.5, 17.67766952966369, 17.677669529663685, -41.02645915887269, -28.58068157741856),
    (0.5, 0.5, 1.5308084989341915e-15, 25.0, -0.00045243926825554317, -5.554155957181826e-20),
    (0.5, 0.5, -17.677669529663685, 17.67766952966369, 1.0832197372832099e-06, 0.00045134733403689304),
    (0.5, 0.5, -25.0, 0.0, 0.00045027273172231337, 0.0),
    (0.5, 0.5, 34.64823227814083, 34.648232278140824, -3.704937220806616, 97.92982399657613),
    (0.5, 0.5, 3.0003846579110155e-15, 49.0, -0.00011756401972413978, -1.4406447835984106e-20),
    (0.5, 0.5, -34.648232278140824, 34.64823227814083, 7.340089370034474e-08, 0.00011749046575254757),
    (0.5, 0.5, -49.0, 0.0, 0.00011741721749109743, 0.0),
    (0.5, 0.5, 49.49747468305833, 49.49747468305832, 139.31253167713206, -13.85713239320507),
    (0.5, 0.5, 4.2862637970157365e-15, 70.0, -5.7587998247517e-05, -7.054656243233678e-21),
    (0.5, 0.5, -49.49747468305832, 49.49747468305833, 1.7623574904391553e-08, 5.7570356676521176e-05),
    (0.5, 0.5, -70.0, 0.0, 5.7552751072017846e-05, 0.0),
    (0.5, 0.5, 70.71067811865476, 70.71067811865474, -91.43470216178997, -177.87553309975732),
    (0.5, 0.5, 6.123233995736766e-15, 100.0, -2.821371165749031e-05, -3.455701626302862e-21),
    (0.5, 0.5, -70.71067811865474, 70.71067811865476, 4.231421506353182e-09, 2.8209478119532515e-05),
    (0.5, 0.5, -100.0, 0.0, 2.8205248812996592e-05, 0.0),
    (0.5, 1.7, 0.5, 0.0, 1.7880979696558117, 0.0),
    (0.5, 1.7, 0.3535533905932738, 0.35355339059327373, 1.3673661144469316, 0.5151758611291238),
    (0.5, 1.7, 3.061616997868383e-17, 0.5, 0.9527269029437881, 0.40603350317319714),
    (0.5, 1.7, -0.35355339059327373, 0.3535533905932738, 0.8038649034685103, 0.19350581917849669),
    (0.5, 1.7, -0.5, 0.0, 0.7687963037226915, 0.0),
    (0.5, 1.7, 1.5, 0.0, 9.66858691445214, 0.0),
    (0.5, 1.7, 1.0606601717798214, 1.0606601717798212, -0.05674007702656949, 1.9260776341697747),
    (0.5, 1.7, 9.184850993605148e-17, 1.5, 0.3695327668812589, 0.5882527405446485),
    (0.5, 1.7, -1.0606601717798212, 1.0606601717798214, 0.44995235257394234, 0.23597821702293867),
    (0.5, 1.7, -1.5, 0.0, 0.46560862992018154, 0.0),
    (0.5, 1.7, 4.0, 0.0, 2551864.8114657593, 0.0),
    (0.5, 1.7, 2.8284271247461903, 2.82842712474619, -0.38967058299780694, 0.4506264688726794),
    (0.5, 1.7, 2.4492935982947064e-16, 4.0, 0.049138742837831706, 0.2686837028044064),
    (0.5, 1.7, -2.82842712474619, 2.8284271247461903, 0.18936353545725948, 0.14696594305346336),
    (0.5, 1.7, -4.0, 0.0, 0.22822016163759976, 0.0),
    (0.5, 1.7, 9.0, 0.0, 1.3897718687780874e+34, 0.0),
    (0.5, 1.7, 6.3639610306789285, 6.363961030678928, -0.1046470264303186, 0.005047491523808775),
    (0.5, 1.7, 5.51091059616309e-16, 9.0, 0.009546711166001991, 0.12071200592811751),
    (0.5, 1.7, -6.363961030678928, 6.3639610306789285, 0.08532533466163109, 0.07627267920920557),
    (0.5, 1.7, -9.0, 0.0, 0.11183350858275651, 0.0),
    (0.5, 1.7, 25.0, 0.0, 5.997429797361116e+269, 0.0),
    (0.5, 1.7, 17.67766952966369, 17.677669529663685, -0.03719934614628767, 0.0531741076369706),
    (0.5, 1.7, 1.5308084989341915e-15, 25.0, 0.001233205983665462, 0.04355101815390641),
    (0.5, 1.7, -17.677669529663685, 17.67766952966369, 0.03079465392265756, 0.029582348894118697),
    (0.5, 1.7, -25.0, 0.0, 0.042346877175833776, 0.0),
    (0.5, 1.7, 34.64823227814083, 34.648232278140824, -0.007437007345508435, 0.01369123069965831),
    (0.5, 1.7, 3.0003846579110155e-15, 49.0, 0.00032089941433779604, 0.02222517690285787),
    (0.5, 1.7, -34.648232278140824, 34.64823227814083, 0.015715534083480982, 0.015397333282812307),
    (0.5, 1.7, -49.0, 0.0, 0.02190806063283591, 0.0),
    (0.5, 1.7, 49.49747468305833, 49.49747468305832, -0.013098982819972925, 0.006376564625180625),
    (0.5, 1.7, 4.2862637970157365e-15, 70.0, 0.00015723068626598597, 0.015558285139140869),
    (0.5, 1.7, -49.49747468305832, 49.49747468305833, 0.011001359446426214, 0.01084504612436817),
    (0.5, 1.7, -70.0, 0.0, 0.015402343820454495, 0.0),
    (0.5, 1.7, 70.71067811865476, 70.71067811865474, -0.009934469708822436, 0.010027842457715005),
    (0.5, 1.7, 6.123233995736766e-15, 100.0, 7.70406298367261e-05, 0.010891026368270024),
    (0.5, 1.7, -70.71067811865474, 70.71067811865476, 0.007701116312584256, 0.007624388356548571),
    (0.5, 1.7, -100.0, 0.0, 0.010814426010507234, 0.0),
    (0.7, 1.0, 0.5, 0.0, 1.8249850568512025, 0.0),
    (0.7, 1.0, 0.3535533905932738, 0.35355339059327373, 1.333735087740731, 0.6281505015309174),
    (0.7, 1.0, 3.061616997868383e-17, 0.5, 0.8115850969869528, 0.4960049801371615),
    (0.7, 1.0, -0.35355339059327373, 0.3535533905932738, 0.6396588198366839, 0.22658774110257537),
    (0.7, 1.0, -0.5, 0.0, 0.6051475920595643, 0.0),
    (0.7, 1.0, 1.5, 0.0, 8.369635409569065, 0.0),
    (0.7, 1.0, 1.0606601717798214, 1.0606601717798212, -0.24818657191390747, 3.1692556380421424),
    (0.7, 1.0, 9.184850993605148e-17, 1.5, -0.018378787179093622, 0.6257750565761531),
    (0.7, 1.0, -1.0606601717798212, 1.0606601717798214, 0.23727117545270185, 0.22321512217112038),
    (0.7, 1.0, -1.5, 0.0, 0.28384096962173716, 0.0),
    (0.7, 1.0, 4.0, 0.0, 2003.0571184078876, 0.0),
    (0.7, 1.0, 2.8284271247461903, 2.82842712474619, 32.08499788931633, 8.081680637592653),
    (0.7, 1.0, 2.4492935982947064e-16, 4.0, -0.00479576212538242, 0.07197530843356824),
    (0.7, 1.0, -2.82842712474619, 2.8284271247461903, 0.06045980442021783, 0.07777456466798283),
    (0.7, 1.0, -4.0, 0.0, 0.09976025489051463, 0.0),
    (0.7, 1.0, 9.0, 0.0, 15054800410.405453, 0.0),
    (0.7, 1.0, 6.3639610306789285, 6.363961030678928, -11604.32636707361, 29701.060386344878),
    (0.7, 1.0, 5.51091059616309e-16, 9.0, -0.0033601741849382787, 0.0369814481478764),
    (0.7, 1.0, -6.363961030678928, 6.3639610306789285, 0.026224438765377372, 0.029694040252378432),
    (0.7, 1.0, -9.0, 0.0, 0.04053119726735068, 0.0),
    (0.7, 1.0, 25.0, 0.0, 1.9546116572764569e+43, 0.0),
    (0.7, 1.0, 17.67766952966369, 17.677669529663685, 3.487038517544332e+17, 7.42165693758644e+18),
    (0.7, 1.0, 1.5308084989341915e-15, 25.0, -0.0004305601055927386, 0.013364213576819722),
    (0.7, 1.0, -17.677669529663685, 17.67766952966369, 0.009450882822102838, 0.009889165037882272),
    (0.7, 1.0, -25.0, 0.0, 0.013806344377170002, 0.0),
    (0.7, 1.0, 49.0, 0.0, 9.237658803718238e+112, 0.0),
    (0.7, 1.0, 34.64823227814083, 34.648232278140824, 2.0790176057383613e+47, 1.2634385519177422e+49),
    (0.7, 1.0, 3.0003846579110155e-15, 49.0, -0.00011192518799773089, 0.006821014222891163),
    (0.7, 1.0, -34.648232278140824, 34.64823227814083, 0.004823245123403159, 0.004936299045253257),
    (0.7, 1.0, -49.0, 0.0, 0.006934580473601437, 0.0),
    (0.7, 1.0, 70.0, 0.0, 8.516947468608464e+187, 0.0),
    (0.7, 1.0, 49.49747468305833, 49.49747468305832, 4.242063587189242e+81, -2.8273337161415495e+79),
    (0.7, 1.0, 4.2862637970157365e-15, 70.0, -5.4829784126119524e-05, 0.004775024303009143),
    (0.7, 1.0, -49.49747468305832, 49.49747468305833, 0.003376466019544729, 0.0034316941109879223),
    (0.7, 1.0, -70.0, 0.0, 0.0048304281675201535, 0.0),
    (0.7, 1.0, 70.71067811865476, 70.71067811865474, 1.8673255406224914e+135, 5.5511120440893205e+135),
    (0.7, 1.0, 6.123233995736766e-15, 100.0, -2.6863334122892375e-05, 0.0033426244841767818),
    (0.7, 1.0, -70.71067811865474, 70.71067811865476, 0.002363595726033889, 0.0023905983626793205),
    (0.7, 1.0, -100.0, 0.0, 0.003369687416305994, 0.0),
    (0.7, 0.7, 0.5, 0.0, 1.6711092247431754, 0.0),
    (0.7, 0.7, 0.3535533905932738, 0.35355339059327373, 1.0945928933021831, 0.6864008269337833),
    (0.7, 0.7, 3.061616997868383e-17, 0.5, 0.5495577151519488, 0.49287427354325597),
    (0.7, 0.7, -0.35355339059327373, 0.3535533905932738, 0.4085995372847239, 0.210122617814495),
    (0.7, 0.7, -0.5, 0.0, 0.3866108008225271, 0.0),
    (0.7, 0.7, 1.5, 0.0, 10.167769534605432, 0.0),
    (0.7, 0.7, 1.0606601717798214, 1.0606601717798212, -1.3207040710101812, 3.392349470822239),
    (0.7, 0.7, 9.184850993605148e-17, 1.5, -0.2989654811720809, 0.42545362558053507),
    (0.7, 0.7, -1.0606601717798212, 1.0606601717798214, 0.06368225943437227, 0.15339808451970346),
    (0.7, 0.7, -1.5, 0.0, 0.12338382331923949, 0.0),
    (0.7, 0.7, 4.0, 0.0, 3628.567198936974, 0.0),
    (0.7, 0.7, 2.8284271247461903, 2.82842712474619, 50.15091069227089, 32.96292541301333),
    (0.7, 0.7, 2.4492935982947064e-16, 4.0, 0.015175162589106542, -0.0046386228208869975),
    (0.7, 0.7, -2.82842712474619, 2.8284271247461903, -0.003784230492833605, 0.020616782341130145),
    (0.7, 0.7, -4.0, 0.0, 0.019722733789771928, 0.0),
    (0.7, 0.7, 9.0, 0.0, 38604335178.4401, 0.0),
    (0.7, 0.7, 6.3639610306789285, 6.363961030678928, -53240.93344309835, 62059.197136625524),
    (0.7, 0.7, 5.51091059616309e-16, 9.0, -0.0028466950574637688, -0.000529449747463424),
    (0.7, 0.7, -6.363961030678928, 6.3639610306789285, -0.0003876263462868994, 0.0032722040761347768),
    (0.7, 0.7, -9.0, 0.0, 0.0034150085629827986, 0.0),
    (0.7, 0.7, 25.0, 0.0, 7.765646750359297e+43, 0.0),
    (0.7, 0.7, 17.67766952966369, 17.677669529663685, -8.431004799533324e+18, 2.828904960183545e+19),
    (0.7, 0.7, 1.5308084989341915e-15, 25.0, -0.0003738168735933687, -2.4155647065531122e-05),
    (0.7, 0.7, -17.677669529663685, 17.67766952966369, -1.750816378182229e-05, 0.0003914827245598677),
    (0.7, 0.7, -25.0, 0.0, 0.0003988996002371423, 0.0),
    (0.7, 0.7, 49.0, 0.0, 4.897017612179209e+113, 0.0),
    (0.7, 0.7, 34.64823227814083, 34.648232278140824, -2.108073776640221e+49, 6.35822155597987e+49),
    (0.7, 0.7, 3.0003846579110155e-15, 49.0, -9.741784782902535e-05, -3.1994110709925417e-06),
    (0.7, 0.7, -34.648232278140824, 34.64823227814083, -2.295437983304779e-06, 9.971821855742904e-05),
    (0.7, 0.7, -49.0, 0.0, 0.00010068603598548025, 0.0),
    (0.7, 0.7, 70.0, 0.0, 5.260660454091826e+188, 0.0),
    (0.7, 0.7, 49.49747468305833, 49.49747468305832, 2.4789254612646266e+82, 8.489116889468717e+81),
    (0.7, 0.7, 4.2862637970157365e-15, 70.0, -4.774421575957961e-05, -1.0968564681566821e-06),
    (0.7, 0.7, -49.49747468305832, 49.49747468305833, -7.838597806831729e-07, 4.8528877534091196e-05),
    (0.7, 0.7, -70.0, 0.0, 4.8858033381268804e-05, 0.0),
    (0.7, 0.7, 70.71067811865476, 70.71067811865474, -5.10103335809646e+134, 4.214724462747318e+136),
    (0.7, 0.7, 6.123233995736766e-15, 100.0, -2.3396927327161045e-05, -3.76130550503607e-07),
    (0.7, 0.7, -70.71067811865474, 70.71067811865476, -2.680019907970678e-07, 2.3665060931211307e-05),
    (0.7, 0.7, -100.0, 0.0, 2.377720552356958e-05, 0.0),
    (0.7, 0.5, 0.5, 0.0, 1.485844893721836, 0.0),
    (0.7, 0.5, 0.3535533905932738, 0.35355339059327373, 0.8606070942703659, 0.7020125201790658),
    (0.7, 0.5, 3.061616997868383e-17, 0.5, 0.3265564342736816, 0.4621636970811729),
    (0.7, 0.5, -0.35355339059327373, 0.3535533905932738, 0.22124485621938011, 0.18415949959770578),
    (0.7, 0.5, -0.5, 0.0, 0.2110743773652226, 0.0),
    (0.7, 0.5, 1.5, 0.0, 11.476974809577484, 0.0),
    (0.7, 0.5, 1.0606601717798214, 1.0606601717798212, -2.238759409757518, 3.352208829362146),
    (0.7, 0.5, 9.184850993605148e-17, 1.5, -0.4741253223343906, 0.22262029588289536),
    (0.7, 0.5, -1.0606601717798212, 1.0606601717798214, -0.05408119767007654, 0.0887836413713191),
    (0.7, 0.5, -1.5, 0.0, 0.010047747483856053, 0.0),
    (0.7, 0.5, 4.0, 0.0, 5392.0598095511195, 0.0),
    (0.7, 0.5, 2.8284271247461903, 2.82842712474619, 61.780849372878286, 64.32001541683438),
    (0.7, 0.5, 2.4492935982947064e-16, 4.0, 0.03400499524307928, -0.02869665832523442),
    (0.7, 0.5, -2.82842712474619, 2.8284271247461903, -0.0376196422788847, -0.01758015186498941),
    (0.7, 0.5, -4.0, 0.0, -0.02893118643049391, 0.0),
    (0.7, 0.5, 9.0, 0.0, 72323060290.64749, 0.0),
    (0.7, 0.5, 6.3639610306789285, 6.363961030678928, -123114.37710178684, 91154.32153598334),
    (0.7, 0.5, 5.51091059616309e-16, 9.0, -0.0010519498044681888, -0.019676964377316593),
    (0.7, 0.5, -6.363961030678928, 6.3639610306789285, -0.014024165829224782, -0.011899301940676192),
    (0.7, 0.5, -9.0, 0.0, -0.017230760141150533, 0.0),
    (0.7, 0.5, 25.0, 0.0, 1.9480004918212492e+44, 0.0),
    (0.7, 0.5, 17.67766952966369, 17.677669529663685, -3.6409468393073353e+19, 6.447735699361459e+19),
    (0.7, 0.5, 1.5308084989341915e-15, 25.0, -0.00014957850372787366, -0.0068991925567866595),
    (0.7, 0.5, -17.677669529663685, 17.67766952966369, -0.004880238108008707, -0.004687914037991767),
    (0.7, 0.5, -25.0, 0.0, -0.006690683289566709, 0.0),
    (0.7, 0.5, 49.0, 0.0, 1.4888290415619977e+114, 0.0),
    (0.7, 0.5, 34.64823227814083, 34.648232278140824, -1.0549935878597984e+50, 1.7419927648745622e+50),
    (0.7, 0.5, 3.0003846579110155e-15, 49.0, -3.928106266284542e-05, -0.0035095440293941666),
    (0.7, 0.5, -34.648232278140824, 34.64823227814083, -0.0024817422818495883, -0.002437018456787386),
    (0.7, 0.5, -49.0, 0.0, -0.0034626659354176437, 0.0),
    (0.7, 0.5, 70.0, 0.0, 1.7709697376403758e+189, 0.0),
    (0.7, 0.5, 49.49747468305833, 49.49747468305832, 7.500000620122123e+82, 4.643130314826758e+82),
    (0.7, 0.5, 4.2862637970157365e-15, 70.0, -1.9277783239257436e-05, -0.0024553675495868443),
    (0.7, 0.5, -49.49747468305832, 49.49747468305833, -0.0017362358280404496, -0.0017151159835305644),
    (0.7, 0.5, -70.0, 0.0, -0.002433508643485815, 0.0),
    (0.7, 0.5, 70.71067811865476, 70.71067811865474, -3.6813559836883007e+136, 1.5274566952496273e+137),
    (0.7, 0.5, 6.123233995736766e-15, 100.0, -9.453318745385872e-06, -0.001718306829545454),
    (0.7, 0.5, -70.71067811865474, 70.71067811865476, -0.0012150333218602474, -0.001204954115072991),
    (0.7, 0.5, -100.0, 0.0, -0.0017079741079361272, 0.0),
    (0.7, 1.7, 0.5, 0.0, 1.649970113702405, 0.0),
    (0.7, 1.7, 0.3535533905932738, 0.35355339059327373, 1.3603116457992017, 0.4163662711537685),
    (0.7, 1.7, 3.061616997868383e-17, 0.5, 0.992009960274323, 0.3768298060260945),
    (0.7, 1.7, -0.35355339059327373, 0.3535533905932738, 0.8300428406032342, 0.18915592753374283),
    (0.7, 1.7, -0.5, 0.0, 0.7897048158808715, 0.0),
    (0.7, 1.7, 1.5, 0.0, 4.913090273046043, 0.0),
    (0.7, 1.7, 1.0606601717798214, 1.0606601717798212, 0.9056006425246551, 2.0824022281064076),
    (0.7, 1.7, 9.184850993605148e-17, 1.5, 0.4171833710507687, 0.678919191452729),
    (0.7, 1.7, -1.0606601717798212, 1.0606601717798214, 0.4647784337296145, 0.25432919832883744),
    (0.7, 1.7, -1.5, 0.0, 0.47743935358550854, 0.0),
    (0.7, 1.7, 4.0, 0.0, 500.5142796019719, 0.0),
    (0.7, 1.7, 2.8284271247461903, 2.82842712474619, 6.923755995732719, -4.066450404619825),
    (0.7, 1.7, 2.4492935982947064e-16, 4.0, 0.017993827108392046, 0.2511989405313456),
    (0.7, 1.7, -2.82842712474619, 2.8284271247461903, 0.17983754139309036, 0.15234008035280922),
    (0.7, 1.7, -4.0, 0.0, 0.22505993627737134, 0.0),
    (0.7, 1.7, 9.0, 0.0, 1672755601.0450504, 0.0),
    (0.7, 1.7, 6.3639610306789285, 6.363961030678928, 1421.7351372860899, 3245.3362421840434),
    (0.7, 1.7, 5.51091059616309e-16, 9.0, 0.004109049794208482, 0.11148446379832648),
    (0.7, 1.7, -6.363961030678928, 6.3639610306789285, 0.07884001776955787, 0.07417404949771719),
    (0.7, 1.7, -9.0, 0.0, 0.10660764474807215, 0.0),
    (0.7, 1.7, 25.0, 0.0, 7.818446629105827e+41, 0.0),
    (0.7, 1.7, 17.67766952966369, 17.677669529663685, 2.1977899225635942e+17, 2.0005332360024522e+17),
    (0.7, 1.7, 1.5308084989341915e-15, 25.0, 0.0005345685430727864, 0.04001722240422371),
    (0.7, 1.7, -17.677669529663685, 17.67766952966369, 0.028296667740535943, 0.027737252087851192),
    (0.7, 1.7, -25.0, 0.0, 0.0394477462249132, 0.0),
    (0.7, 1.7, 49.0, 0.0, 1.8852364905547425e+111, 0.0),
    (0.7, 1.7, 34.64823227814083, 34.648232278140824, 1.853238453358746e+47, 1.793234884084305e+47),
    (0.7, 1.7, 3.0003846579110155e-15, 49.0, 0.00013920437189573679, 0.02041044745281628),
    (0.7, 1.7, -34.648232278140824, 34.64823227814083, 0.014432382089414846, 0.014289913088236756),
    (0.7, 1.7, -49.0, 0.0, 0.02026664121482446, 0.0),
    (0.7, 1.7, 70.0, 0.0, 1.2167067812297806e+186, 0.0),
    (0.7, 1.7, 49.49747468305833, 49.49747468305832, 4.2565709432749063e+79, -4.313691710228079e+79),
    (0.7, 1.7, 4.2862637970157365e-15, 70.0, 6.821463290012973e-05, 0.014286497568344658),
    (0.7, 1.7, -49.49747468305832, 49.49747468305833, 0.010102083333493128, 0.010032752642726343),
    (0.7, 1.7, -70.0, 0.0, 0.014216708169035426, 0.0),
    (0.7, 1.7, 70.71067811865476, 70.71067811865474, 5.245627521958875e+133, 2.604830417044877e+133),
    (0.7, 1.7, 6.123233995736766e-15, 100.0, 3.34262448417672e-05, 0.010000268633341228),
    (0.7, 1.7, -70.71067811865474, 70.71067811865476, 0.007071258749340294, 0.007037450583073416),
    (0.7, 1.7, -100.0, 0.0, 0.00996630312583694, 0.0),
    (0.9, 1.0, 0.5, 0.0, 1.704308722099399, 0.0),
    (0.9, 1.0, 0.3535533905932738, 0.35355339059327373, 1.3413276914205325, 0.5374311893634333),
    (0.9, 1.0, 3.061616997868383e-17, 0.5, 0.8554853269063468, 0.4904966528417247),
    (0.9, 1.0, -0.35355339059327373, 0.3535533905932738, 0.649331937449038, 0.23931892096189744),
    (0.9, 1.0, -0.5, 0.0, 0.603405498695861, 0.0),
    (0.9, 1.0, 1.5, 0.0, 5.299439244428082, 0.0),
    (0.9, 1.0, 1.0606601717798214, 1.0606601717798212, 1.063112761847587, 2.8584633433643263),
    (0.9, 1.0, 9.184850993605148e-17, 1.5, -0.0078235566535576, 0.8827840345449557),
    (0.9, 1.0, -1.0606601717798212, 1.0606601717798214, 0.1870010082790472, 0.26856085360047527),
    (0.9, 1.0, -1.5, 0.0, 0.24309267847921726, 0.0),
    (0.9, 1.0, 4.0, 0.0, 118.074366896324, 0.0),
    (0.9, 1.0, 2.8284271247461903, 2.82842712474619, -20.261898713441923, -9.343815288805082),
    (0.9, 1.0, 2.4492935982947064e-16, 4.0, -0.06597539783798438, -0.4686915386835543),
    (0.9, 1.0, -2.82842712474619, 2.8284271247461903, -0.0026270758192950498, 0.04370278263411268),
    (0.9, 1.0, -4.0, 0.0, 0.050411103314434616, 0.0),
    (0.9, 1.0, 9.0, 0.0, 108447.61095572241, 0.0),
    (0.9, 1.0, 6.3639610306789285, 6.363961030678928, -1452.959901171589, 1045.9755906786827),
    (0.9, 1.0, 5.51091059616309e-16, 9.0, 0.045330592182626105, -0.1323381873988329),
    (0.9, 1.0, -6.363961030678928, 6.3639610306789285, 0.007716431315750154, 0.010693490826007122),
    (0.9, 1.0, -9.0, 0.0, 0.014646307996637192, 0.0),
    (0.9, 1.0, 25.0, 0.0, 3727779799664920.0, 0.0),
    (0.9, 1.0, 17.67766952966369, 17.677669529663685, -6684037815.896704, 8232496599.97145),
    (0.9, 1.0, 1.5308084989341915e-15, 25.0, -0.002059066173935871, 0.002827896891557355),
    (0.9, 1.0, -17.677669529663685, 17.67766952966369, 0.002951921435861344, 0.0032695526427040356),
    (0.9, 1.0, -25.0, 0.0, 0.004512147121840188, 0.0),
    (0.9, 1.0, 49.0, 0.0, 6.897113776865776e+32, 0.0),
    (0.9, 1.0, 34.64823227814083, 34.648232278140824, 3.638899725669642e+20, 1.2817433299695748e+21),
    (0.9, 1.0, 3.0003846579110155e-15, 49.0, -7.124107592685399e-05, 0.002139876415750019),
    (0.9, 1.0, -34.648232278140824, 34.64823227814083, 0.001514274391626487, 0.0015918281662321795),
    (0.9, 1.0, -49.0, 0.0, 0.0022213460906081455, 0.0),
    (0.9, 1.0, 70.0, 0.0, 6.118202907442446e+48, 0.0),
    (0.9, 1.0, 49.49747468305833, 49.49747468305832, -9.700755403153661e+30, -2.1685633913627285e+31),
    (0.9, 1.0, 4.2862637970157365e-15, 70.0, -3.551971178577944e-05, 0.00150046471073049),
    (0.9, 1.0, -49.49747468305832, 49.49747468305833, 0.0010609402551571023, 0.0010981903380126504),
    (0.9, 1.0, -70.0, 0.0, 0.0015383964532054116, 0.0),
    (0.9, 1.0, 100.0, 0.0, 3.0934517544703477e+72, 0.0),
    (0.9, 1.0, 70.71067811865476, 70.71067811865474, -2.1385983062623094e+46, 3.492747784228298e+46),
    (0.9, 1.0, 6.123233995736766e-15, 100.0, -1.7414751467993002e-05, 0.0010507395914978782),
    (0.9, 1.0, -70.71067811865474, 70.71067811865476, 0.0007429733148166264, 0.0007609730962111487),
    (0.9, 1.0, -100.0, 0.0, 0.001068972418287089, 0.0),
    (0.9, 0.9, 0.5, 0.0, 1.6742480910659137, 0.0),
    (0.9, 0.9, 0.3535533905932738, 0.35355339059327373, 1.2857367368635857, 0.5646465508495075),
    (0.9, 0.9, 3.061616997868383e-17, 0.5, 0.7792299550828193, 0.5038998826487269),
    (0.9, 0.9, -0.35355339059327373, 0.3535533905932738, 0.5750755029695956, 0.2411109768292617),
    (0.9, 0.9, -0.5, 0.0, 0.5319023515684373, 0.0),
    (0.9, 0.9, 1.5, 0.0, 5.594438181308794, 0.0),
    (0.9, 0.9, 1.0606601717798214, 1.0606601717798212, 0.8932041982416723, 3.050006547072414),
    (0.9, 0.9, 9.184850993605148e-17, 1.5, -0.13807587968732066, 0.8574393382092749),
    (0.9, 0.9, -1.0606601717798212, 1.0606601717798214, 0.11618398132431827, 0.24927810835160566),
    (0.9, 0.9, -1.5, 0.0, 0.18239955004099984, 0.0),
    (0.9, 0.9, 4.0, 0.0, 137.7627146476564, 0.0),
    (0.9, 0.9, 2.8284271247461903, 2.82842712474619, -22.574382049913538, -12.933010980892952),
    (0.9, 0.9, 2.4492935982947064e-16, 4.0, 0.02943845676961601, -0.5784114549623421),
    (0.9, 0.9, -2.82842712474619, 2.8284271247461903, -0.025514215253566567, 0.0168555987273956),
    (0.9, 0.9, -4.0, 0.0, 0.01992384714278625, 0.0),
    (0.9, 0.9, 9.0, 0.0, 138435.34175355014, 0.0),
    (0.9, 0.9, 6.3639610306789285, 6.363961030678928, -1964.0315197263233, 1168.4672629271818),
    (0.9, 0.9, 5.51091059616309e-16, 9.0, 0.09028706027811813, -0.17031128675993668),
    (0.9, 0.9, -6.363961030678928, 6.3639610306789285, -0.00043107325186821685, 0.0013684257242455174),
    (0.9, 0.9, -9.0, 0.0, 0.001882316735778574, 0.0),
    (0.9, 0.9, 25.0, 0.0, 5330610105209328.0, 0.0),
    (0.9, 0.9, 17.67766952966369, 17.677669529663685, -10547613151.980328, 10894387526.68039),
    (0.9, 0.9, 1.5308084989341915e-15, 25.0, -0.002324080220320022, -0.0023657625183113318),
    (0.9, 0.9, -17.677669529663685, 17.67766952966369, -1.72269304662262e-05, 0.00016518902318289543),
    (0.9, 0.9, -25.0, 0.0, 0.00017468551917377773, 0.0),
    (0.9, 0.9, 49.0, 0.0, 1.0628377094045553e+33, 0.0),
    (0.9, 0.9, 34.64823227814083, 34.648232278140824, 3.864707711358828e+20, 2.0165090626760003e+21),
    (0.9, 0.9, 3.0003846579110155e-15, 49.0, -3.696462244496685e-05, -5.279687188930695e-06),
    (0.9, 0.9, -34.648232278140824, 34.64823227814083, -2.0816006753994083e-06, 4.127504142994558e-05),
    (0.9, 0.9, -49.0, 0.0, 4.2269322207404215e-05, 0.0),
    (0.9, 0.9, 70.0, 0.0, 9.809226650748145e+48, 0.0),
    (0.9, 0.9, 49.49747468305833, 49.49747468305832, -1.246364339277624e+31, -3.5991501317655157e+31),
    (0.9, 0.9, 4.2862637970157365e-15, 70.0, -1.9266513528731845e-05, -9.162280537031501e-07),
    (0.9, 0.9, -49.49747468305832, 49.49747468305833, -6.930670548429182e-07, 1.9951383377149125e-05),
    (0.9, 0.9, -70.0, 0.0, 2.026837501360247e-05, 0.0),
    (0.9, 0.9, 100.0, 0.0, 5.1601885334344506e+72, 0.0),
    (0.9, 0.9, 70.71067811865476, 70.71067811865474, -4.061613495460037e+46, 5.493164664203858e+46),
    (0.9, 0.9, 6.123233995736766e-15, 100.0, -9.44950927341619e-06, -3.1326303654183405e-07),
    (0.9, 0.9, -70.71067811865474, 70.71067811865476, -2.3282272992255064e-07, 9.681726087518716e-06),
    (0.9, 0.9, -100.0, 0.0, 9.785063588909692e-06, 0.0),
    (0.9, 0.5, 0.5, 0.0, 1.4042134129976267, 0.0),
    (0.9, 0.5, 0.3535533905932738, 0.35355339059327373, 0.9161190403067779, 0.6481317872507367),
    (0.9, 0.5, 3.061616997868383e-17, 0.5, 0.358933436441759, 0.5132483218136082),
    (0.9, 0.5, -0.35355339059327373, 0.3535533905932738, 0.19391465434953092, 0.21988554033701255),
    (0.9, 0.5, -0.5, 0.0, 0.1713802754676761, 0.0),
    (0.9, 0.5, 1.5, 0.0, 6.7940954899119514, 0.0),
    (0.9, 0.5, 1.0606601717798214, 1.0606601717798212, -0.15669297501602747, 3.7500445117752896),
    (0.9, 0.5, 9.184850993605148e-17, 1.5, -0.7248921651467854, 0.5823753088326137),
    (0.9, 0.5, -1.0606601717798212, 1.0606601717798214, -0.18266897306992635, 0.11704051436905391),
    (0.9, 0.5, -1.5, 0.0, -0.07804748128249622, 0.0),
    (0.9, 0.5, 4.0, 0.0, 255.14947418825622, 0.0),
    (0.9, 0.5, 2.8284271247461903, 2.82842712474619, -31.0497995881484, -36.82988708274472),
    (0.9, 0.5, 2.4492935982947064e-16, 4.0, 0.7480445184707802, -0.8381207767962698),
    (0.9, 0.5, -2.82842712474619, 2.8284271247461903, -0.0750210485609362, -0.08960105024415543),
    (0.9, 0.5, -4.0, 0.0, -0.08233662482047463, 0.0),
    (0.9, 0.5, 9.0, 0.0, 367582.4668384565, 0.0),
    (0.9, 0.5, 6.3639610306789285, 6.363961030678928, -5961.647352513209, 1131.821830365725),
    (0.9, 0.5, 5.51091059616309e-16, 9.0, 0.47938517111235107, -0.21903883600888163),
    (0.9, 0.5, -6.363961030678928, 6.3639610306789285, -0.02040465320722196, -0.025141218597981085),
    (0.9, 0.5, -9.0, 0.0, -0.03419653514323693, 0.0),
    (0.9, 0.5, 25.0, 0.0, 2.22886409803789e+16, 0.0),
    (0.9, 0.5, 17.67766952966369, 17.677669529663685, -57022344794.10552, 27721217436.778526),
    (0.9, 0.5, 1.5308084989341915e-15, 25.0, -0.00018340520252824822, -0.02407639476262207),
    (0.9, 0.5, -17.677669529663685, 17.67766952966369, -0.007574955823251345, -0.008098504660164077),
    (0.9, 0.5, -25.0, 0.0, -0.011255476725722142, 0.0),
    (0.9, 0.5, 49.0, 0.0, 5.993288895066085e+33, 0.0),
    (0.9, 0.5, 34.64823227814083, 34.648232278140824, -1.8412468561705886e+21, 1.1430600171893983e+22),
    (0.9, 0.5, 3.0003846579110155e-15, 49.0, 0.00014426870755615757, -0.005481008914127899),
    (0.9, 0.5, -34.648232278140824, 34.64823227814083, -0.003873286173422288, -0.004003990052435783),
    (0.9, 0.5, -49.0, 0.0, -0.005610778577848166, 0.0),
    (0.9, 0.5, 70.0, 0.0, 6.481542047233703e+49, 0.0),
    (0.9, 0.5, 49.49747468305833, 49.49747468305832, 3.950185029132568e+30, -2.516421884105344e+32),
    (0.9, 0.5, 4.2862637970157365e-15, 70.0, 6.12830180147142e-05, -0.0038358891966283467),
    (0.9, 0.5, -49.49747468305832, 49.49747468305833, -0.002712326962259574, -0.002775541076635165),
    (0.9, 0.5, -70.0, 0.0, -0.003899837508113993, 0.0),
    (0.9, 0.5, 100.0, 0.0, 3.995346577225882e+73, 0.0),
    (0.9, 0.5, 70.71067811865476, 70.71067811865474, -4.409773274855152e+47, 2.921089890739957e+47),
    (0.9, 0.5, 6.123233995736766e-15, 100.0, 3.0038232363990533e-05, -0.002685566368257353),
    (0.9, 0.5, -70.71067811865474, 70.71067811865476, -0.0018989754904328755, -0.001929668519422855),
    (0.9, 0.5, -100.0, 0.0, -0.0027165250428292935, 0.0),
    (0.9, 1.7, 0.5, 0.0, 1.5396925106130903, 0.0),
    (0.9, 1.7, 0.3535533905932738, 0.35355339059327373, 1.3373617306051422, 0.33110098254133263),
    (0.9, 1.7, 3.061616997868383e-17, 0.5, 1.0269456345167425, 0.33759294235647397),
    (0.9, 1.7, -0.35355339059327373, 0.3535533905932738, 0.8604505828429247, 0.18068638850336524),
    (0.9, 1.7, -0.5, 0.0, 0.8151717971360538, 0.0),
    (0.9, 1.7, 1.5, 0.0, 3.3550363370046035, 0.0),
    (0.9, 1.7, 1.0606601717798214, 1.0606601717798212, 1.4456672797225403, 1.607337919532665),
    (0.9, 1.7, 9.184850993605148e-17, 1.5, 0.5441181726605514, 0.7578542101784103),
    (0.9, 1.7, -1.0606601717798212, 1.0606601717798214, 0.4910977034497377, 0.2794356630756557),
    (0.9, 1.7, -1.5, 0.0, 0.4938718087700879, 0.0),
    (0.9, 1.7, 4.0, 0.0, 39.96592996279498, 0.0),
    (0.9, 1.7, 2.8284271247461903, 2.82842712474619, -7.618790211965805, 1.4895798977223202),
    (0.9, 1.7, 2.4492935982947064e-16, 4.0, -0.1697367147588789, 0.17570879686659047),
    (0.9, 1.7, -2.82842712474619, 2.8284271247461903, 0.15792816270431986, 0.16180045361927262),
    (0.9, 1.7, -4.0, 0.0, 0.21717875126213473, 0.0),
    (0.9, 1.7, 9.0, 0.0, 19634.92852979238, 0.0),
    (0.9, 1.7, 6.3639610306789285, 6.363961030678928, -106.93453570780994, 306.08369577274215),
    (0.9, 1.7, 5.51091059616309e-16, 9.0, -0.022664691219393792, 0.07848495766374106),
    (0.9, 1.7, -6.363961030678928, 6.3639610306789285, 0.06751033138919887, 0.06865213462642974),
    (0.9, 1.7, -9.0, 0.0, 0.0965355252364542, 0.0),
    (0.9, 1.7, 25.0, 0.0, 304904319684483.5, 0.0),
    (0.9, 1.7, 17.67766952966369, 17.677669529663685, -61612401.537573226, 865157650.2934479),
    (0.9, 1.7, 1.5308084989341915e-15, 25.0, -0.00030393092521729985, 0.03445663112235463),
    (0.9, 1.7, -17.677669529663685, 17.67766952966369, 0.024294928533910614, 0.024444214145804638),
    (0.9, 1.7, -25.0, 0.0, 0.03450663520040778, 0.0),
    (0.9, 1.7, 49.0, 0.0, 3.342492482430144e+31, 0.0),
    (0.9, 1.7, 34.64823227814083, 34.648232278140824, 5.007399480896757e+19, 4.076755636674391e+19),
    (0.9, 1.7, 3.0003846579110155e-15, 49.0, -3.9074525698205594e-05, 0.0175292397598244),
    (0.9, 1.7, -34.648232278140824, 34.64823227814083, 0.012395139292642564, 0.012434082982328426),
    (0.9, 1.7, -49.0, 0.0, 0.017568266857109854, 0.0),
    (0.9, 1.7, 70.0, 0.0, 2.246713126653123e+47, 0.0),
    (0.9, 1.7, 49.49747468305833, 49.49747468305832, -7.48564792648886e+29, -4.4799496616174795e+29),
    (0.9, 1.7, 4.2862637970157365e-15, 70.0, -1.9105088970966026e-05, 0.012270528410915974),
    (0.9, 1.7, -49.49747468305832, 49.49747468305833, 0.008676582009770863, 0.008695672085590828),
    (0.9, 1.7, -70.0, 0.0, 0.012289618325977929, 0.0),
    (0.9, 1.7, 100.0, 0.0, 8.607713264675593e+70, 0.0),
    (0.9, 1.7, 70.71067811865476, 70.71067811865474, 6.998711569165169e+43, 1.1374382384091801e+45),
    (0.9, 1.7, 6.123233995736766e-15, 100.0, -9.359580680931975e-06, 0.008589370104603087),
    (0.9, 1.7, -70.71067811865474, 70.71067811865476, 0.006073603768465308, 0.006082959762476693),
    (0.9, 1.7, -100.0, 0.0, 0.008598726090014663, 0.0),
    (1.0, 1.0, 0.5, 0.0, 1.6487212707001282, 0.0),
    (1.0, 1.0, 0.3535533905932738, 0.35355339059327373, 1.336034887024494, 0.49307784608611277),
    (1.0, 1.0, 3.061616997868383e-17, 0.5, 0.8775825618903728, 0.479425538604203),
    (1.0, 1.0, -0.35355339059327373, 0.3535533905932738, 0.6587569734035542, 0.24312124832566312),
    (1.0, 1.0, -0.5, 0.0, 0.6065306597126334, 0.0),
    (1.0, 1.0, 1.5, 0.0, 4.4816890703380645, 0.0),
    (1.0, 1.0, 1.0606601717798214, 1.0606601717798212, 1.4103343689042485, 2.520535991483608),
    (1.0, 1.0, 9.184850993605148e-17, 1.5, 0.07073720166770292, 0.9974949866040546),
    (1.0, 1.0, -1.0606601717798212, 1.0606601717798214, 0.16906136453359027, 0.30214484130264835),
    (1.0, 1.0, -1.5, 0.0, 0.22313016014842982, 0.0),
    (1.0, 1.0, 4.0, 0.0, 54.598150033144236, 0.0),
    (1.0, 1.0, 2.8284271247461903, 2.82842712474619, -16.09594977585814, 5.212213029745191),
    (1.0, 1.0, 2.4492935982947064e-16, 4.0, -0.653643620863612, -0.7568024953079284),
    (1.0, 1.0, -2.82842712474619, 2.8284271247461903, -0.05623102793939626, 0.01820881032701041),
    (1.0, 1.0, -4.0, 0.0, 0.01831563888873418, 0.0),
    (1.0, 1.0, 9.0, 0.0, 8103.083927575384, 0.0),
    (1.0, 1.0, 6.3639610306789285, 6.363961030678928, 578.6484456237544, 46.84266958520337),
    (1.0, 1.0, 5.51091059616309e-16, 9.0, -0.9111302618846775, 0.4121184852417568),
    (1.0, 1.0, -6.363961030678928, 6.3639610306789285, 0.0017169137294213792, 0.00013898736468027982),
    (1.0, 1.0, -9.0, 0.0, 0.00012340980408667956, 0.0),
    (1.0, 1.0, 25.0, 0.0, 72004899337.38588, 0.0),
    (1.0, 1.0, 17.67766952966369, 17.677669529663685, 18476057.739310976, -43833138.78788701),
    (1.0, 1.0, 1.5308084989341915e-15, 25.0, 0.9912028118634751, -0.13235175009777322),
    (1.0, 1.0, -17.677669529663685, 17.67766952966369, 8.165459921457608e-09, -1.9371975507667174e-08),
    (1.0, 1.0, -25.0, 0.0, 1.3887943864964021e-11, 0.0),
    (1.0, 1.0, 49.0, 0.0, 1.9073465724950998e+21, 0.0),
    (1.0, 1.0, 34.64823227814083, 34.648232278140824, -1111083644874478.4, -101067204154242.98),
    (1.0, 1.0, 3.0003846579110155e-15, 49.0, 0.300592543743638, -0.9537526527594746),
    (1.0, 1.0, -34.648232278140824, 34.64823227814083, -8.926363796058548e-16, -8.119664404143786e-17),
    (1.0, 1.0, -49.0, 0.0, 5.242885663363464e-22, 0.0),
    (1.0, 1.0, 70.0, 0.0, 2.515438670919167e+30, 0.0),
    (1.0, 1.0, 49.49747468305833, 49.49747468305832, 2.2562531733268044e+21, -2.1791126594728614e+21),
    (1.0, 1.0, 4.2862637970157365e-15, 70.0, 0.6333192030863025, 0.7738906815578924),
    (1.0, 1.0, -49.49747468305832, 49.49747468305833, 2.2931242342307784e-22, -2.2147231115860455e-22),
    (1.0, 1.0, -70.0, 0.0, 3.975449735908647e-31, 0.0),
    (1.0, 1.0, 100.0, 0.0, 2.6881171418161356e+43, 0.0),
    (1.0, 1.0, 70.71067811865476, 70.71067811865474, -1.2718148767722114e+29, 5.118271065488874e+30),
    (1.0, 1.0, 6.123233995736766e-15, 100.0, 0.8623188722876892, -0.5063656411097619),
    (1.0, 1.0, -70.71067811865474, 70.71067811865476, -4.851871202641299e-33, 1.9525791405246482e-31),
    (1.0, 1.0, -100.0, 0.0, 3.720075976020836e-44, 0.0),
    (1.0, 0.5, 0.5, 0.0, 1.360084006368273, 0.0),
    (1.0, 0.5, 0.3535533905932738, 0.35355339059327373, 0.9307435587060622, 0.6131222510006291),
    (1.0, 0.5, 3.061616997868383e-17, 0.5, 0.38144562554252454, 0.5271698119834296),
    (1.0, 0.5, -0.35355339059327373, 0.3535533905932738, 0.1868896967954422, 0.23710441042979252),
    (1.0, 0.5, -0.5, 0.0, 0.15527712659616935, 0.0),
    (1.0, 0.5, 1.5, 0.0, 5.596082541864656, 0.0),
    (1.0, 0.5, 1.0606601717798214, 1.0606601717798212, 0.5136074601114701, 3.4591673906102876),
    (1.0, 0.5, 9.184850993605148e-17, 1.5, -0.7309375445269591, 0.8132891860832758),
    (1.0, 0.5, -1.0606601717798212, 1.0606601717798214, -0.25204182173508727, 0.1530612322837783),
    (1.0, 0.5, -1.5, 0.0, -0.12921287534824336, 0.0),
    (1.0, 0.5, 4.0, 0.0, 109.24969829721522, 0.0),
    (1.0, 0.5, 2.8284271247461903, 2.82842712474619, -33.685313692104806, -2.720694377908207),
    (1.0, 0.5, 2.4492935982947064e-16, 4.0, 0.16519057517903674, -2.0552031772880732),
    (1.0, 0.5, -2.82842712474619, 2.8284271247461903, -0.10806052749137889, -0.16436434579787282),
    (1.0, 0.5, -4.0, 0.0, -0.11586285058437612, 0.0),
    (1.0, 0.5, 9.0, 0.0, 24309.278968856157, 0.0),
    (1.0, 0.5, 6.3639610306789285, 6.363961030678928, 1550.0481605502403, 794.1305998238314),
    (1.0, 0.5, 5.51091059616309e-16, 9.0, -2.802259563599045, -1.0886630659628054),
    (1.0, 0.5, -6.363961030678928, 6.3639610306789285, -0.01894057147345685, -0.023141908293083744),
    (1.0, 0.5, -9.0, 0.0, -0.03928236756504487, 0.0),
    (1.0, 0.5, 25.0, 0.0, 360024496686.94, 0.0),
    (1.0, 0.5, 17.67766952966369, 17.677669529663685, 169219337.95558986, -167130292.90535027),
    (1.0, 0.5, 1.5308084989341915e-15, 25.0, 3.9730331473613383, 3.0252793429301863),
    (1.0, 0.5, -17.677669529663685, 17.67766952966369, -0.007920285998947832, -0.008702106248411228),
    (1.0, 0.5, -25.0, 0.0, -0.012040225606926655, 0.0),
    (1.0, 0.5, 49.0, 0.0, 1.3351426007465699e+22, 0.0),
    (1.0, 0.5, 34.64823227814083, 34.648232278140824, -6914814856755965.0, -3629970569340672.5),
    (1.0, 0.5, 3.0003846579110155e-15, 49.0, 6.208867560817759, -3.238725699070307),
    (1.0, 0.5, -34.648232278140824, 34.64823227814083, -0.0040637983631788875, -0.004253384519744847),
    (1.0, 0.5, -49.0, 0.0, -0.005942972907264486, 0.0),
    (1.0, 0.5, 70.0, 0.0, 2.10456698515607e+31, 0.0),
    (1.0, 0.5, 49.49747468305833, 49.49747468305832, 2.4417223753226546e+22, -9.619974517763581e+21),
    (1.0, 0.5, 4.2862637970157365e-15, 70.0, -0.8315458797527551, 8.321139097809567),
    (1.0, 0.5, -49.49747468305832, 49.49747468305833, -0.002847245753693563, -0.0029381162336094262),
    (1.0, 0.5, -70.0, 0.0, -0.004119530251671888, 0.0),
    (1.0, 0.5, 100.0, 0.0, 2.6881171418161355e+44, 0.0),
    (1.0, 0.5, 70.71067811865476, 70.71067811865474, -2.0761779124955283e+31, 4.679995631012289e+31),
    (1.0, 0.5, 6.123233995736766e-15, 100.0, 9.678103284568495, 2.5141495437892787),
    (1.0, 0.5, -70.71067811865474, 70.71067811865476, -0.0019939251868486348, -0.002037772363604765),
    (1.0, 0.5, -100.0, 0.0, -0.0028643587811196538, 0.0),
    (1.0, 1.7, 0.5, 0.0, 1.4932242101637412, 0.0),
    (1.0, 1.7, 0.3535533905932738, 0.35355339059327373, 1.3227883610946554, 0.29449482499683605),
    (1.0, 1.7, 3.061616997868383e-17, 0.5, 1.0414608567388646, 0.3156652787409996),
    (1.0, 1.7, -0.35355339059327373, 0.3535533905932738, 0.8765830110578198, 0.174620768882467),
    (1.0, 1.7, -0.5, 0.0, 0.8294907446602716, 0.0),
    (1.0, 1.7, 1.5, 0.0, 2.9230584838503573, 0.0),
    (1.0, 1.7, 1.0606601717798214, 1.0606601717798212, 1.5504771073083599, 1.3631371033409592),
    (1.0, 1.7, 9.184850993605148e-17, 1.5, 0.6268871466730904, 0.769950045666931),
    (1.0, 1.7, -1.0606601717798212, 1.0606601717798214, 0.5112918987308454, 0.2923878528145196),
    (1.0, 1.7, -1.5, 0.0, 0.5051134412911827, 0.0),
    (1.0, 1.7, 4.0, 0.0, 20.507547389802728, 0.0),
    (1.0, 1.7, 2.8284271247461903, 2.82842712474619, -4.302933707378585, 4.995411200962566),
    (1.0, 1.7, 2.4492935982947064e-16, 4.0, -0.3807121573021143, 0.2795431243835486),
    (1.0, 1.7, -2.82842712474619, 2.8284271247461903, 0.139374945095523, 0.1723644111751596),
    (1.0, 1.7, -4.0, 0.0, 0.2111756294317312, 0.0),
    (1.0, 1.7, 9.0, 0.0, 1740.4431835311366, 0.0),
    (1.0, 1.7, 6.3639610306789285, 6.363961030678928, 111.17371782515065, -56.305699552313335),
    (1.0, 1.7, 5.51091059616309e-16, 9.0, -0.012737811533736479, 0.29978342533375024),
    (1.0, 1.7, -6.363961030678928, 6.3639610306789285, 0.0601174783127766, 0.06325557292082108),
    (1.0, 1.7, -9.0, 0.0, 0.08903708772174065, 0.0),
    (1.0, 1.7, 25.0, 0.0, 7564914806.487074, 0.0),
    (1.0, 1.7, 17.67766952966369, 17.677669529663685, -751115.8680776973, -4940772.810668782),
    (1.0, 1.7, 1.5308084989341915e-15, 25.0, 0.034519631104719256, -0.06830305417136201),
    (1.0, 1.7, -17.677669529663685, 17.67766952966369, 0.021774202403226674, 0.022172896342133774),
    (1.0, 1.7, -25.0, 0.0, 0.03120639440758129, 0.0),
    (1.0, 1.7, 49.0, 0.0, 1.2511009597197168e+20, 0.0),
    (1.0, 1.7, 34.64823227814083, 34.648232278140824, -65604419746814.47, 32427318180958.527),
    (1.0, 1.7, 3.0003846579110155e-15, 49.0, -0.04688640005586559, -0.030250181069958738),
    (1.0, 1.7, -34.648232278140824, 34.64823227814083, 0.011115276312443247, 0.011215264735541458),
    (1.0, 1.7, -49.0, 0.0, 0.015821046102759924, 0.0),
    (1.0, 1.7, 70.0, 0.0, 1.2854201549511773e+29, 0.0),
    (1.0, 1.7, 49.49747468305833, 49.49747468305832, 4.012411717821355e+19, -1.5518871978154456e+20),
    (1.0, 1.7, 4.2862637970157365e-15, 70.0, 0.049881962465314296, 0.00012246306331702424),
    (1.0, 1.7, -49.49747468305832, 49.49747468305833, 0.007781396211922375, 0.00782982999211313),
    (1.0, 1.7, -70.0, 0.0, 0.011053546546705697, 0.0),
    (1.0, 1.7, 100.0, 0.0, 1.070158709444776e+42, 0.0),
    (1.0, 1.7, 70.71067811865476, 70.71067811865474, 1.0214829813970503e+29, 1.763812078316933e+29),
    (1.0, 1.7, 6.123233995736766e-15, 100.0, -0.002399426762233344, -0.032036200206937496),
    (1.0, 1.7, -70.71067811865474, 70.71067811865476, 0.005447212213218999, 0.005470755508174168),
    (1.0, 1.7, -100.0, 0.0, 0.007727250932362475, 0.0),
];

/// d/dlambda E_{0.6}(lambda 2^0.6) at lambda = -1
pub const FD_DERIV: f64 = 0.25181956614181694;

/// (alpha, beta, Re z, Im z, l, Re, Im) for d^l/dz^l E_{alpha,beta}(z)
pub const ML_DERIV: &[(f64, f64, f64, f64, usize, f64, f64)] = &[
    (0.5, 1.0, -0.7, 0.2, 1, 0.3750822458058866, 0.09821170969477934),
    (0.5, 1.0, -0.7, 0.2, 2, 0.4675816566008169, 0.16708591507339884),
    (0.5, 1.0, -0.7, 0.2, 3, 0.7788802979530434, 0.34595922031668574),
    (0.5, 1.0, -0.7, 0.2, 6, 9.703514068490966, 6.64255046534097),
    (0.5, 1.0, -3.0, 1.0, 1, 0.0424180784670982, 0.027339461974480856),
    (0.5, 1.0, -3.0, 1.0, 2, 0.019334878034421507, 0.02119365535780845),
    (0.5, 1.0, -3.0, 1.0, 3, 0.011275734946246861, 0.02086567181991575),
    (0.5, 1.0, -3.0, 1.0, 6, -0.008433494315015524, 0.04970874147649761),
    (0.5, 1.0, 2.0, 2.0, 1, -9.067016982745384, 6.6837735328069545),
    (0.5, 1.0, 2.0, 2.0, 2, -63.88106771646784, -5.313181379091759),
    (0.5, 1.0, 2.0, 2.0, 3, -270.53961328048587, -250.04190225101058),
    (0.5, 1.0, 2.0, 2.0, 6, 62345.86555570687, -52689.53201434791),
    (0.5, 1.0, -12.0, 0.0, 1, 0.003877862738062271, 0.0),
    (0.5, 1.0, -12.0, 0.0, 2, 0.0006397363162930207, 0.0),
    (0.5, 1.0, -12.0, 0.0, 3, 0.00015777936121658936, 0.0),
    (0.5, 1.0, -12.0, 0.0, 6, 1.0314582562546497e-05, 0.0),
    (0.5, 1.0, -30.0, 5.0, 1, 0.0005761856974308615, 0.00019721199278303363),
    (0.5, 1.0, -30.0, 5.0, 2, 3.5198228378911035e-05, 1.897367457731875e-05),
    (0.5, 1.0, -30.0, 5.0, 3, 3.112341215596261e-06, 2.4097802821198683e-06),
    (0.5, 1.0, -30.0, 5.0, 6, 6.7780502704088e-09, 1.5193357269217872e-08),
    (0.5, 1.0, 8.0, -6.0, 1, -42490859385255.19, -39257891720305.92),
    (0.5, 1.0, 8.0, -6.0, 2, -1151992246055356.2, -123926037802572.3),
    (0.5, 1.0, 8.0, -6.0, 3, -2.0088951828057588e+16, 1.1684058780941894e+16),
    (0.5, 1.0, 8.0, -6.0, 6, 1.3967007515449629e+20, 1.2779146056037461e+20),
    (0.7, 0.7, -0.7, 0.2, 1, 0.35162078039679495, 0.10786687423331481),
    (0.7, 0.7, -0.7, 0.2, 2, 0.5169410734690372, 0.1809133925317449),
    (0.7, 0.7, -0.7, 0.2, 3, 0.8603626153094572, 0.33217785129590927),
    (0.7, 0.7, -0.7, 0.2, 6, 6.376967686386783, 3.0057437700971033),
    (0.7, 0.7, -3.0, 1.0, 1, 0.01342051684134712, 0.017395814186252412),
    (0.7, 0.7, -3.0, 1.0, 2, 0.008704790502507892, 0.01817410636740134),
    (0.7, 0.7, -3.0, 1.0, 3, 0.005987963985264372, 0.021953637173008425),
    (0.7, 0.7, -3.0, 1.0, 6, -0.01089140699580719, 0.06954783277136495),
    (0.7, 0.7, 2.0, 2.0, 1, -4.1565125143934845, -34.607445282119656),
    (0.7, 0.7, 2.0, 2.0, 2, 9.500721246546705, -82.93055863608214),
    (0.7, 0.7, 2.0, 2.0, 3, 65.09192712700728, -197.32963888686587),
    (0.7, 0.7, 2.0, 2.0, 6, 2855.5450548666336, -2650.9277148003944),
    (0.7, 0.7, -12.0, 0.0, 1, 0.00032654631205599404, 0.0),
    (0.7, 0.7, -12.0, 0.0, 2, 8.615250463161506e-05, 0.0),
    (0.7, 0.7, -12.0, 0.0, 3, 3.015312937400596e-05, 0.0),
    (0.7, 0.7, -12.0, 0.0, 6, 4.096194672055189e-06, 0.0),
    (0.7, 0.7, -30.0, 5.0, 1, 1.5694751539976443e-05, 8.73645406376891e-06),
    (0.7, 0.7, -30.0, 5.0, 2, 1.4157232333037009e-06, 1.137609236084321e-06),
    (0.7, 0.7, -30.0, 5.0, 3, 1.6230439250029325e-07, 1.8315550096631995e-07),
    (0.7, 0.7, -30.0, 5.0, 6, 4.275343508653146e-10, 1.9112541595684805e-09),
    (0.7, 0.7, 8.0, -6.0, 1, -170546403.96419567, -19946162.26673827),
    (0.7, 0.7, 8.0, -6.0, 2, -660418396.9874972, 94558097.96016964),
    (0.7, 0.7, 8.0, -6.0, 3, -2411333299.1902742, 999733773.0214843),
    (0.7, 0.7, 8.0, -6.0, 6, -73542461815.35553, 145587254461.8599),
    (0.7, 0.7, -70.0, 10.0, 1, 1.243917316388948e-06, 5.711521238424915e-07),
    (0.7, 0.7, -70.0, 10.0, 2, 4.931003029450739e-08, 3.187664609000279e-08),
    (0.7, 0.7, -70.0, 10.0, 3, 2.530613023046461e-09, 2.2074175866121147e-09),
    (0.7, 0.7, -70.0, 10.0, 6, 8.465226659179189e-13, 1.878327841820727e-12),
    (0.9, 1.3, -0.7, 0.2, 1, 0.4521148923859416, 0.08516867758909256),
    (0.9, 1.3, -0.7, 0.2, 2, 0.4191562916996048, 0.08913554822792513),
    (0.9, 1.3, -0.7, 0.2, 3, 0.4378231847046473, 0.0999238511613549),
    (0.9, 1.3, -0.7, 0.2, 6, 0.6977910935181393, 0.17801701028510405),
    (0.9, 1.3, -3.0, 1.0, 1, 0.05511674265875592, 0.042447657713564464),
    (0.9, 1.3, -3.0, 1.0, 2, 0.030876937145297937, 0.034331374433978386),
    (0.9, 1.3, -3.0, 1.0, 3, 0.02241072317134557, 0.03199154681274542),
    (0.9, 1.3, -3.0, 1.0, 6, 0.0176834503669961, 0.040346974753805845),
    (0.9, 1.3, 2.0, 2.0, 1, -4.905099026967793, 5.089477377035572),
    (0.9, 1.3, 2.0, 2.0, 2, -6.428926768956843, 5.464678531363615),
    (0.9, 1.3, 2.0, 2.0, 3, -8.402372692447566, 6.140735311945686),
    (0.9, 1.3, 2.0, 2.0, 6, -19.822883590860723, 10.36000775627646),
    (0.9, 1.3, -12.0, 0.0, 1, 0.0035252481746629372, 0.0),
    (0.9, 1.3, -12.0, 0.0, 2, 0.0006273275355161069, 0.0),
    (0.9, 1.3, -12.0, 0.0, 3, 0.000168095429919247, 0.0),
    (0.9, 1.3, -12.0, 0.0, 6, 1.448717359260705e-05, 0.0),
    (0.9, 1.3, -30.0, 5.0, 1, 0.00047979431868609327, 0.00016849813342338486),
    (0.9, 1.3, -30.0, 5.0, 2, 2.9885905550812978e-05, 1.6594866822794872e-05),
    (0.9, 1.3, -30.0, 5.0, 3, 2.689815090233283e-06, 2.1584502792967566e-06),
    (0.9, 1.3, -30.0, 5.0, 6, 5.934412757460961e-09, 1.4635610483431247e-08),
    (0.9, 1.3, 8.0, -6.0, 1, -5842.524934374933, -11055.797286512348),
    (0.9, 1.3, 8.0, -6.0, 2, -9514.422256169866, -14972.456809016223),
    (0.9, 1.3, 8.0, -6.0, 3, -15120.554731675866, -20312.930627928137),
    (0.9, 1.3, 8.0, -6.0, 6, -56471.978271344684, -51422.61985428138),
    (0.9, 1.3, -70.0, 10.0, 1, 8.8050873714934e-05, 2.5930451692800788e-05),
    (0.9, 1.3, -70.0, 10.0, 2, 2.3817455549242674e-06, 1.0912727021143479e-06),
    (0.9, 1.3, -70.0, 10.0, 3, 9.426235875270551e-08, 6.080616221192149e-08),
    (0.9, 1.3, -70.0, 10.0, 6, 2.106064754035001e-11, 3.300858575359807e-11),
];

/// t^alpha E_alpha(-t^alpha) at t = 1e4, alpha = 0.5
pub const DECAY_PRODUCT_1E4: f64 = 0.5641613782989433;

/// (sign, t, |t^{-1/2} E_{1/2,1/2}(sign t^{1/2})|)
pub const RL_SOLUTION: &[(f64, f64, f64)] = &[
    (1.0, 1.0, 5.57316966431004),
    (1.0, 10.0, 44052.93942430672),
    (1.0, 20.0, 970330390.8225232),
    (1.0, 50.0, 1.0369411057174144e+22),
    (-1.0, 1.0, 0.13660600739194928),
    (-1.0, 10.0, 0.007834693289304456),
    (-1.0, 20.0, 0.0029426860131157766),
    (-1.0, 50.0, 0.0007750678775145297),
];
