#include "weylflag/golden.hpp"

namespace weylflag::golden {

const char* tangent_table_n2 = R"csv(w,tau,dim
"1,2","1,2",0
"2,1","1,2",1
"2,1","2,1",1
)csv";

const char* tangent_table_n3 = R"csv(w,tau,dim
"1,2,3","1,2,3",0
"1,3,2","1,2,3",1
"1,3,2","1,3,2",1
"2,1,3","1,2,3",1
"2,1,3","2,1,3",1
"2,3,1","1,2,3",2
"2,3,1","1,3,2",2
"2,3,1","2,1,3",2
"2,3,1","2,3,1",2
"3,1,2","1,2,3",2
"3,1,2","1,3,2",2
"3,1,2","2,1,3",2
"3,1,2","3,1,2",2
"3,2,1","1,2,3",3
"3,2,1","1,3,2",3
"3,2,1","2,1,3",3
"3,2,1","2,3,1",3
"3,2,1","3,1,2",3
"3,2,1","3,2,1",3
)csv";

const char* tangent_table_n4 = R"csv(w,tau,dim
"1,2,3,4","1,2,3,4",0
"1,2,4,3","1,2,3,4",1
"1,2,4,3","1,2,4,3",1
"1,3,2,4","1,2,3,4",1
"1,3,2,4","1,3,2,4",1
"1,3,4,2","1,2,3,4",2
"1,3,4,2","1,2,4,3",2
"1,3,4,2","1,3,2,4",2
"1,3,4,2","1,3,4,2",2
"1,4,2,3","1,2,3,4",2
"1,4,2,3","1,2,4,3",2
"1,4,2,3","1,3,2,4",2
"1,4,2,3","1,4,2,3",2
"1,4,3,2","1,2,3,4",3
"1,4,3,2","1,2,4,3",3
"1,4,3,2","1,3,2,4",3
"1,4,3,2","1,3,4,2",3
"1,4,3,2","1,4,2,3",3
"1,4,3,2","1,4,3,2",3
"2,1,3,4","1,2,3,4",1
"2,1,3,4","2,1,3,4",1
"2,1,4,3","1,2,3,4",2
"2,1,4,3","1,2,4,3",2
"2,1,4,3","2,1,3,4",2
"2,1,4,3","2,1,4,3",2
"2,3,1,4","1,2,3,4",2
"2,3,1,4","1,3,2,4",2
"2,3,1,4","2,1,3,4",2
"2,3,1,4","2,3,1,4",2
"2,3,4,1","1,2,3,4",3
"2,3,4,1","1,2,4,3",3
"2,3,4,1","1,3,2,4",3
"2,3,4,1","1,3,4,2",3
"2,3,4,1","2,1,3,4",3
"2,3,4,1","2,1,4,3",3
"2,3,4,1","2,3,1,4",3
"2,3,4,1","2,3,4,1",3
"2,4,1,3","1,2,3,4",3
"2,4,1,3","1,2,4,3",3
"2,4,1,3","1,3,2,4",3
"2,4,1,3","1,4,2,3",3
"2,4,1,3","2,1,3,4",3
"2,4,1,3","2,1,4,3",3
"2,4,1,3","2,3,1,4",3
"2,4,1,3","2,4,1,3",3
"2,4,3,1","1,2,3,4",4
"2,4,3,1","1,2,4,3",4
"2,4,3,1","1,3,2,4",4
"2,4,3,1","1,3,4,2",4
"2,4,3,1","1,4,2,3",4
"2,4,3,1","1,4,3,2",4
"2,4,3,1","2,1,3,4",4
"2,4,3,1","2,1,4,3",4
"2,4,3,1","2,3,1,4",4
"2,4,3,1","2,3,4,1",4
"2,4,3,1","2,4,1,3",4
"2,4,3,1","2,4,3,1",4
"3,1,2,4","1,2,3,4",2
"3,1,2,4","1,3,2,4",2
"3,1,2,4","2,1,3,4",2
"3,1,2,4","3,1,2,4",2
"3,1,4,2","1,2,3,4",3
"3,1,4,2","1,2,4,3",3
"3,1,4,2","1,3,2,4",3
"3,1,4,2","1,3,4,2",3
"3,1,4,2","2,1,3,4",3
"3,1,4,2","2,1,4,3",3
"3,1,4,2","3,1,2,4",3
"3,1,4,2","3,1,4,2",3
"3,2,1,4","1,2,3,4",3
"3,2,1,4","1,3,2,4",3
"3,2,1,4","2,1,3,4",3
"3,2,1,4","2,3,1,4",3
"3,2,1,4","3,1,2,4",3
"3,2,1,4","3,2,1,4",3
"3,2,4,1","1,2,3,4",4
"3,2,4,1","1,2,4,3",4
"3,2,4,1","1,3,2,4",4
"3,2,4,1","1,3,4,2",4
"3,2,4,1","2,1,3,4",4
"3,2,4,1","2,1,4,3",4
"3,2,4,1","2,3,1,4",4
"3,2,4,1","2,3,4,1",4
"3,2,4,1","3,1,2,4",4
"3,2,4,1","3,1,4,2",4
"3,2,4,1","3,2,1,4",4
"3,2,4,1","3,2,4,1",4
"3,4,1,2","1,2,3,4",5
"3,4,1,2","1,2,4,3",4
"3,4,1,2","1,3,2,4",5
"3,4,1,2","1,3,4,2",4
"3,4,1,2","1,4,2,3",4
"3,4,1,2","1,4,3,2",4
"3,4,1,2","2,1,3,4",4
"3,4,1,2","2,1,4,3",4
"3,4,1,2","2,3,1,4",4
"3,4,1,2","2,4,1,3",4
"3,4,1,2","3,1,2,4",4
"3,4,1,2","3,1,4,2",4
"3,4,1,2","3,2,1,4",4
"3,4,1,2","3,4,1,2",4
"3,4,2,1","1,2,3,4",5
"3,4,2,1","1,2,4,3",5
"3,4,2,1","1,3,2,4",5
"3,4,2,1","1,3,4,2",5
"3,4,2,1","1,4,2,3",5
"3,4,2,1","1,4,3,2",5
"3,4,2,1","2,1,3,4",5
"3,4,2,1","2,1,4,3",5
"3,4,2,1","2,3,1,4",5
"3,4,2,1","2,3,4,1",5
"3,4,2,1","2,4,1,3",5
"3,4,2,1","2,4,3,1",5
"3,4,2,1","3,1,2,4",5
"3,4,2,1","3,1,4,2",5
"3,4,2,1","3,2,1,4",5
"3,4,2,1","3,2,4,1",5
"3,4,2,1","3,4,1,2",5
"3,4,2,1","3,4,2,1",5
"4,1,2,3","1,2,3,4",3
"4,1,2,3","1,2,4,3",3
"4,1,2,3","1,3,2,4",3
"4,1,2,3","1,4,2,3",3
"4,1,2,3","2,1,3,4",3
"4,1,2,3","2,1,4,3",3
"4,1,2,3","3,1,2,4",3
"4,1,2,3","4,1,2,3",3
"4,1,3,2","1,2,3,4",4
"4,1,3,2","1,2,4,3",4
"4,1,3,2","1,3,2,4",4
"4,1,3,2","1,3,4,2",4
"4,1,3,2","1,4,2,3",4
"4,1,3,2","1,4,3,2",4
"4,1,3,2","2,1,3,4",4
"4,1,3,2","2,1,4,3",4
"4,1,3,2","3,1,2,4",4
"4,1,3,2","3,1,4,2",4
"4,1,3,2","4,1,2,3",4
"4,1,3,2","4,1,3,2",4
"4,2,1,3","1,2,3,4",4
"4,2,1,3","1,2,4,3",4
"4,2,1,3","1,3,2,4",4
"4,2,1,3","1,4,2,3",4
"4,2,1,3","2,1,3,4",4
"4,2,1,3","2,1,4,3",4
"4,2,1,3","2,3,1,4",4
"4,2,1,3","2,4,1,3",4
"4,2,1,3","3,1,2,4",4
"4,2,1,3","3,2,1,4",4
"4,2,1,3","4,1,2,3",4
"4,2,1,3","4,2,1,3",4
"4,2,3,1","1,2,3,4",6
"4,2,3,1","1,2,4,3",6
"4,2,3,1","1,3,2,4",5
"4,2,3,1","1,3,4,2",5
"4,2,3,1","1,4,2,3",5
"4,2,3,1","1,4,3,2",5
"4,2,3,1","2,1,3,4",6
"4,2,3,1","2,1,4,3",6
"4,2,3,1","2,3,1,4",5
"4,2,3,1","2,3,4,1",5
"4,2,3,1","2,4,1,3",5
"4,2,3,1","2,4,3,1",5
"4,2,3,1","3,1,2,4",5
"4,2,3,1","3,1,4,2",5
"4,2,3,1","3,2,1,4",5
"4,2,3,1","3,2,4,1",5
"4,2,3,1","4,1,2,3",5
"4,2,3,1","4,1,3,2",5
"4,2,3,1","4,2,1,3",5
"4,2,3,1","4,2,3,1",5
"4,3,1,2","1,2,3,4",5
"4,3,1,2","1,2,4,3",5
"4,3,1,2","1,3,2,4",5
"4,3,1,2","1,3,4,2",5
"4,3,1,2","1,4,2,3",5
"4,3,1,2","1,4,3,2",5
"4,3,1,2","2,1,3,4",5
"4,3,1,2","2,1,4,3",5
"4,3,1,2","2,3,1,4",5
"4,3,1,2","2,4,1,3",5
"4,3,1,2","3,1,2,4",5
"4,3,1,2","3,1,4,2",5
"4,3,1,2","3,2,1,4",5
"4,3,1,2","3,4,1,2",5
"4,3,1,2","4,1,2,3",5
"4,3,1,2","4,1,3,2",5
"4,3,1,2","4,2,1,3",5
"4,3,1,2","4,3,1,2",5
"4,3,2,1","1,2,3,4",6
"4,3,2,1","1,2,4,3",6
"4,3,2,1","1,3,2,4",6
"4,3,2,1","1,3,4,2",6
"4,3,2,1","1,4,2,3",6
"4,3,2,1","1,4,3,2",6
"4,3,2,1","2,1,3,4",6
"4,3,2,1","2,1,4,3",6
"4,3,2,1","2,3,1,4",6
"4,3,2,1","2,3,4,1",6
"4,3,2,1","2,4,1,3",6
"4,3,2,1","2,4,3,1",6
"4,3,2,1","3,1,2,4",6
"4,3,2,1","3,1,4,2",6
"4,3,2,1","3,2,1,4",6
"4,3,2,1","3,2,4,1",6
"4,3,2,1","3,4,1,2",6
"4,3,2,1","3,4,2,1",6
"4,3,2,1","4,1,2,3",6
"4,3,2,1","4,1,3,2",6
"4,3,2,1","4,2,1,3",6
"4,3,2,1","4,2,3,1",6
"4,3,2,1","4,3,1,2",6
"4,3,2,1","4,3,2,1",6
)csv";

const char* bad_pair_n4_w1 = "1,3,2,4";
const char* bad_pair_n4_w2 = "4,2,3,1";

}  // namespace weylflag::golden
