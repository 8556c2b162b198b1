public abstract class Abstract2 extends Abstract0 {
}
