public abstract class Abstract1 extends Abstract0 {
}
