#![allow(clippy::excessive_precision)]
// Reference values computed at 40 significant digits with mpmath.
#![allow(dead_code)]

pub const UPPER_GAMMA: &[(f64, f64, f64)] = &[
    (-5.0, 1e-08, 1.9999999749999999574e+39),
    (-5.0, 0.0001, 19997500166658328958.0),
    (-5.0, 0.01, 1975165837.4473918495),
    (-5.0, 0.3, 56.801472977443046493),
    (-5.0, 1.0, 0.059485040741944384652),
    (-5.0, 1.9, 0.00084005662077727922868),
    (-5.0, 3.5, 6.4475030068705987556e-6),
    (-5.0, 10.0, 2.9005281239895977656e-11),
    (-5.0, 30.0, 1.0744440608874758959e-22),
    (-5.0, 100.0, 3.5113481425226959597e-56),
    (-4.5, 1e-08, 2.2222221936507936416e+35),
    (-4.5, 0.0001, 222193652793539642.9),
    (-4.5, 0.01, 219384969.02894770693),
    (-4.5, 0.3, 34.251029576608625179),
    (-4.5, 1.0, 0.064524142956182918365),
    (-4.5, 1.9, 0.0012404768974802752332),
    (-4.5, 3.5, 0.00001274284100579280952),
    (-4.5, 10.0, 9.4623478302554871819e-11),
    (-4.5, 30.0, 5.9663085576792730691e-22),
    (-4.5, 100.0, 3.527851111242660698e-55),
    (-3.0, 1e-08, 3.3333332833333336241e+23),
    (-3.0, 0.0001, 333283338331.58887158),
    (-3.0, 0.01, 328382.35603577378027),
    (-3.0, 0.3, 8.034637934722390639),
    (-3.0, 1.0, 0.086062491324560728252),
    (-3.0, 1.9, 0.0041160943630471293364),
    (-3.0, 3.5, 0.00010020262545203707109),
    (-3.0, 10.0, 3.3041014105470106453e-9),
    (-3.0, 30.0, 1.022716030147150916e-19),
    (-3.0, 100.0, 3.5782956332650479164e-52),
    (-2.2, 1e-08, 180957801479485116.79),
    (-2.2, 0.0001, 286746226.73592066067),
    (-2.2, 0.01, 11212.421691328363323),
    (-2.2, 0.3, 3.9441320257857931268),
    (-2.2, 1.0, 0.10406491379398686919),
    (-2.2, 1.9, 0.0079880127893228612521),
    (-2.2, 3.5, 0.00030508597842731593791),
    (-2.2, 10.0, 2.206532084025966331e-8),
    (-2.2, 30.0, 1.5905938920532334067e-18),
    (-2.2, 100.0, 1.4354902112305764921e-50),
    (-1.0, 1e-08, 99999981.156534913857),
    (-1.0, 0.0001, 9990.3668252937581904),
    (-1.0, 0.01, 94.967053798378689465),
    (-1.0, 0.3, 1.5637174172632129325),
    (-1.0, 1.0, 0.14849550677592204792),
    (-1.0, 1.9, 0.022515947732115182787),
    (-1.0, 3.5, 0.0016576839773997501492),
    (-1.0, 10.0, 3.8302404656316087616e-7),
    (-1.0, 30.0, 9.7655645591245656823e-17),
    (-1.0, 100.0, 3.6478214338803782725e-48),
    (-0.5, 1e-08, 19996.455292298188425),
    (-0.5, 0.0001, 196.47509196486229637),
    (-0.5, 0.01, 16.654759630333674212),
    (-0.5, 0.3, 1.150367047355164337),
    (-0.5, 1.0, 0.17814771178156069019),
    (-0.5, 1.9, 0.035331286306741758761),
    (-0.5, 3.5, 0.0033879188047673312305),
    (-0.5, 10.0, 1.2609042613241570681e-6),
    (-0.5, 30.0, 5.4314372469021467831e-16),
    (-0.5, 100.0, 3.6656231225114085412e-47),
    (-0.02596851, 1e-08, 23.018248945328394232),
    (-0.02596851, 0.0001, 9.8017279949979642179),
    (-0.02596851, 0.01, 4.2998608035284587365),
    (-0.02596851, 0.3, 0.91519988067822340351),
    (-0.02596851, 1.0, 0.21686690953823728619),
    (-0.02596851, 1.9, 0.054845115351728660277),
    (-0.02596851, 3.5, 0.0067126320287544667293),
    (-0.02596851, 10.0, 3.9070781766469802486e-6),
    (-0.02596851, 30.0, 2.7638735152945551855e-15),
    (-0.02596851, 100.0, 3.2675677013896128764e-46),
    (0.0, 1e-08, 17.843465089050832566),
    (0.0, 0.0001, 8.6332247045747053821),
    (0.0, 0.01, 4.0379295765381138112),
    (0.0, 0.3, 0.90567665167584673985),
    (0.0, 1.0, 0.21938393439552027368),
    (0.0, 1.9, 0.05620437817453485559),
    (0.0, 3.5, 0.0069701398575483929193),
    (0.0, 10.0, 4.1569689296853242774e-6),
    (0.0, 30.0, 3.0215520106888125448e-15),
    (0.0, 100.0, 3.6835977616820321802e-46),
    (0.3, 1e-08, 2.9782987486997644614),
    (0.3, 0.0001, 2.7812547262417326387),
    (0.3, 0.01, 2.1562002828889784439),
    (0.3, 0.3, 0.81682594287191058732),
    (0.3, 1.0, 0.25226657904968819104),
    (0.3, 1.9, 0.074814381214619928115),
    (0.3, 3.5, 0.010783361542157655935),
    (0.3, 10.0, 8.5105490812153072713e-6),
    (0.3, 30.0, 8.4618903670613635859e-15),
    (0.3, 100.0, 1.470793646103356336e-45),
    (0.5, 1e-08, 1.772253850906182694),
    (0.5, 0.0001, 1.7524545175521831697),
    (0.5, 0.01, 1.5731185223248433247),
    (0.5, 0.3, 0.77735931124980805179),
    (0.5, 1.0, 0.2788055852806619765),
    (0.5, 1.9, 0.090842837854398619781),
    (0.5, 3.5, 0.014447220989525331571),
    (0.5, 10.0, 0.00001372626623544985766),
    (0.5, 30.0, 1.6813032086528978612e-14),
    (0.5, 100.0, 3.7017478604082789203e-45),
    (1.0, 1e-08, 0.99999999000000005),
    (1.0, 0.0001, 0.9999000049998333375),
    (1.0, 0.01, 0.99004983374916805337),
    (1.0, 0.3, 0.74081822068171787429),
    (1.0, 1.0, 0.3678794411714423216),
    (1.0, 1.9, 0.14956861922263506593),
    (1.0, 3.5, 0.03019738342231850074),
    (1.0, 10.0, 0.000045399929762484851536),
    (1.0, 30.0, 9.3576229688401746049e-14),
    (1.0, 100.0, 3.720075976020835963e-44),
    (1.97403149, 1e-08, 0.98929725603754099397),
    (1.97403149, 0.0001, 0.98929724960339173029),
    (1.97403149, 0.01, 0.98924054057116160076),
    (1.97403149, 0.3, 0.95065176354480599801),
    (1.97403149, 1.0, 0.72072013801768722534),
    (1.97403149, 1.9, 0.42137205991813922938),
    (1.97403149, 3.5, 0.13060972198016495745),
    (1.97403149, 10.0, 0.00046920367952917718836),
    (1.97403149, 30.0, 2.6533417937222548853e-12),
    (1.97403149, 100.0, 3.3329086383768101177e-42),
    (2.5, 1e-08, 1.3293403881791370205),
    (2.5, 0.0001, 1.3293403881391398775),
    (2.5, 0.01, 1.3293364166397568712),
    (2.5, 0.3, 1.3133926142981467263),
    (2.5, 1.0, 1.1288027918891022864),
    (2.5, 1.9, 0.76909691570098987834),
    (2.5, 3.5, 0.29330607260055144944),
    (2.5, 10.0, 0.0016613173117794600556),
    (2.5, 30.0, 1.6157560505750907958e-11),
    (2.5, 100.0, 3.7761547467506791233e-41),
    (7.0, 1e-08, 720.0),
    (7.0, 0.0001, 720.0),
    (7.0, 0.01, 719.99999999999999858),
    (7.0, 0.3, 719.99997595695042125),
    (7.0, 1.0, 719.94006637251262336),
    (7.0, 1.9, 717.51877963609927923),
    (7.0, 3.5, 672.99257013915334556),
    (7.0, 10.0, 93.701823035387734781),
    (7.0, 30.0, 0.000084469982416898118823),
    (7.0, 100.0, 3.9549008344247097802e-32),
    (15.5, 1e-08, 334838609873.55645697),
    (15.5, 0.0001, 334838609873.55645697),
    (15.5, 0.01, 334838609873.55645697),
    (15.5, 0.3, 334838609873.55645697),
    (15.5, 1.0, 334838609873.5311975),
    (15.5, 1.9, 334838609645.5681425),
    (15.5, 3.5, 334837942230.47398851),
    (15.5, 10.0, 313343183483.60899048),
    (15.5, 30.0, 451960460.67617350547),
    (15.5, 100.0, 4.3425781490734066419e-15),
    (30.0, 1e-08, 8.8417619937397019545e+30),
    (30.0, 0.0001, 8.8417619937397019545e+30),
    (30.0, 0.01, 8.8417619937397019545e+30),
    (30.0, 0.3, 8.8417619937397019545e+30),
    (30.0, 1.0, 8.8417619937397019545e+30),
    (30.0, 1.9, 8.8417619937397019545e+30),
    (30.0, 3.5, 8.8417619937397019307e+30),
    (30.0, 10.0, 8.8417597745005879735e+30),
    (30.0, 30.0, 4.2061763675312574071e+30),
    (30.0, 100.0, 521067996228628.9469),
    (50.0, 1e-08, 6.0828186403426756087e+62),
    (50.0, 0.0001, 6.0828186403426756087e+62),
    (50.0, 0.01, 6.0828186403426756087e+62),
    (50.0, 0.3, 6.0828186403426756087e+62),
    (50.0, 1.0, 6.0828186403426756087e+62),
    (50.0, 1.9, 6.0828186403426756087e+62),
    (50.0, 3.5, 6.0828186403426756087e+62),
    (50.0, 10.0, 6.0828186403426756076e+62),
    (50.0, 30.0, 6.0796623176819737524e+62),
    (50.0, 100.0, 7.168298065270533087e+54),
];

pub const GAMMA: &[(f64, f64)] = &[
    (0.1, 9.5135076986687312858),
    (0.25, 3.6256099082219083119),
    (0.5, 1.7724538509055160273),
    (0.9, 1.068628702119319337),
    (1.3, 0.89747069630627718175),
    (2.5, 1.3293403881791370205),
    (3.7, 4.1706517837966040301),
    (7.5, 1871.2543057977883465),
    (12.25, 73711509.046769949091),
    (20.5, 540624298233507504.47),
    (33.3, 7.4875775965226323274e+35),
    (49.9, 4.1180110342530352191e+62),
    (50.0, 6.0828186403426756087e+62),
];
