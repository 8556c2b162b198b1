public abstract class Abstract22 extends Abstract15 {
}
