#include "core/builtin_data.hpp"

namespace eichler {

const char* builtin_catalog_text() {
    return R"EKDATA(# Named group catalog.
# Fields: name :: order :: construction :: provenance
Q8 :: 8 :: Q(8) :: standard
Q12 :: 12 :: Q(12) :: standard
Q16 :: 16 :: Q(16) :: standard
Q20 :: 20 :: Q(20) :: standard
BT :: 24 :: BT :: standard
BO :: 48 :: BO :: standard
BI :: 120 :: BI :: standard
Q8xC2 :: 16 :: Q(8) x C(2) :: standard
Q12xC2 :: 24 :: Q(12) x C(2) :: standard
SG(32,14) :: 32 :: SG(32,14) :: curated
Q16xC2 :: 32 :: Q(16) x C(2) :: standard
SG(36,7) :: 36 :: SG(36,7) :: curated
Q20xC2 :: 40 :: Q(20) x C(2) :: standard
BTxC2 :: 48 :: BT x C(2) :: standard
SG(64,14) :: 64 :: SG(64,14) :: curated
SG(96,66) :: 96 :: SG(96,66) :: curated
BOxC2 :: 96 :: BO x C(2) :: standard
SG(100,7) :: 100 :: SG(100,7) :: curated
Q8:BT :: 192 :: SG(192,1022) :: curated
BIxC2 :: 240 :: BI x C(2) :: standard
SG(384,18129) :: 384 :: SG(384,18129) :: curated
BT^2 :: 576 :: BT x BT :: standard
SG(1152,155476) :: 1152 :: SG(1152,155476) :: derived
SG(1152,155456) :: 1152 :: SG(1152,155456) :: curated
BTxBI :: 2880 :: BT x BI :: standard
BI^2 :: 14400 :: BI x BI :: standard
BTxC2^2 :: 96 :: BT x C(2) x C(2) :: standard
BTxQ12 :: 288 :: BT x Q(12) :: standard
(Q8:BT)xC2 :: 384 :: SG(192,1022) x C(2) :: standard
BTxQ20 :: 480 :: BT x Q(20) :: standard
BTxBO :: 1152 :: BT x BO :: standard
BT^2xC2 :: 1152 :: BT x BT x C(2) :: standard
Q8:BT^2 :: 4608 :: perm[56]:(1,2,3,4)(5,8,7,6);(1,5,3,7)(2,6,4,8);(2,6,5)(4,8,7)(9,10,11,12,18,16)(13,26,25,17,29,15)(14,24,27,23,22,28)(19,31,30,21,32,20);(2,5,6)(4,7,8)(9,14,13,12,23,17)(10,15,19,18,25,21)(11,20,22,16,30,24)(26,27,32,29,28,31);(2,6,5)(4,8,7)(33,34,35,36,42,40)(37,50,49,41,53,39)(38,48,51,47,46,52)(43,55,54,45,56,44);(2,5,6)(4,7,8)(33,38,37,36,47,41)(34,39,43,42,49,45)(35,44,46,40,54,48)(50,51,56,53,52,55) :: external
BTx(Q8:BT) :: 4608 :: BT x SG(192,1022) :: standard
BT^3 :: 13824 :: BT x BT x BT :: standard
BIx(Q8:BT) :: 23040 :: BI x SG(192,1022) :: standard
BT^2xBI :: 69120 :: BT x BT x BI :: standard
BTxBI^2 :: 345600 :: BT x BI x BI :: standard
BI^3 :: 1728000 :: BI x BI x BI :: standard
)EKDATA";
}

const char* builtin_presentations_text() {
    return R"EKDATA(# Stored presentations.
# Fields: name :: order :: presentation :: provenance
SG(32,14) :: 32 :: r,s | r^8, s^4, S*r*s=R :: curated
SG(36,7) :: 36 :: a,x,y | a^3, x^6, y^2=x^3, Y*x*y=X, [a,x], Y*a*y=A :: curated
SG(64,14) :: 64 :: a,r,s | a^4, r^8, r*a*R=A, [s,a], s^2=r^4*a, S*r*s=R*a^3 :: curated
SG(96,66) :: 96 :: x,y,u,v | x^4, y^2=x^2, Y*x*y=X, u^6, v^2=u^3, V*u*v=U, U*x*u=y, U*y*u=x*y, V*x*v=Y, V*y*v=X :: curated
SG(100,7) :: 100 :: a,x,y | a^5, x^10, y^2=x^5, Y*x*y=X, [a,x], Y*a*y=A :: curated
SG(192,183) :: 192 :: a,b,t | a^3=b^3=(a*b)^2, t^8, [a,t], [b,t] :: stand-in
SG(192,1022) :: 192 :: x,y,a,b | x^4, y^2=x^2, Y*x*y=X, a^3=b^3=(a*b)^2, A*x*a=x*y, A*y*a=x, B*x*b=y, B*y*b=x*y :: curated
SG(384,18129) :: 384 :: x,y,c,d | x^4, y^2=x^2, Y*x*y=X, c^3=d^4=(c*d)^2, C*x*c=y, C*y*c=x*y, D*x*d=y, D*y*d=X :: curated
SG(1152,155476) :: 1152 :: a,b,c,d | a^3=b^3=(a*b)^2, c^3=d^4=(c*d)^2, [a,c], C*b*c=a*B, D*a*d=b, D*b*d=A*b :: derived
SG(1152,155456) :: 1152 :: a,b,c,d | a^3=b^3=(a*b)^2, c^3=d^4=(c*d)^2, [a,c], [a,d], [b,c], [b,d] :: curated
Q8:BT^2 :: 4608 :: x,y,a,b,c,d | x^4, y^2=x^2, Y*x*y=X, a^3=b^3=(a*b)^2, c^3=d^3=(c*d)^2, [a,c], [a,d], [b,c], [b,d], A*x*a=x*y, A*y*a=x, B*x*b=y, B*y*b=x*y, C*x*c=x*y, C*y*c=x, D*x*d=y, D*y*d=x*y :: external
)EKDATA";
}

} // namespace eichler
