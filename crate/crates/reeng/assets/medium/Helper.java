public class Helper {
}
